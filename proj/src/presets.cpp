#include "nfb/presets.hpp"

#include <sstream>

namespace nfb {

namespace {

FiniteMonoid named(FiniteMonoid M, const std::string& name) {
    M.name = name;
    return M;
}

std::vector<RewriteRule> rules(std::initializer_list<const char*> texts) {
    std::vector<RewriteRule> out;
    for (const char* t : texts) out.push_back(parse_rule(t));
    return out;
}

} // namespace

FiniteMonoid monoid_L() {
    return named(from_rules(rules({"aa -> a", "bb -> b", "aba -> 0"})), "L");
}

FiniteMonoid monoid_L1() { return named(adjoin_identity(monoid_L()), "L1"); }

FiniteMonoid monoid_A0() {
    return named(from_rules(rules({"aa -> a", "bb -> b", "ab -> 0"})), "A0");
}

FiniteMonoid monoid_A01() { return named(adjoin_identity(monoid_A0()), "A01"); }

FiniteMonoid monoid_A2() {
    return named(from_rules(rules({"aa -> a", "bb -> 0", "aba -> a", "bab -> b"})), "A2");
}

FiniteMonoid monoid_A21() { return named(adjoin_identity(monoid_A2()), "A21"); }

FiniteMonoid perkins25() {
    std::vector<Word> W = {parse_word("abtba"), parse_word("atbab"),
                           parse_word("abab"), parse_word("aat")};
    return named(dilworth(W), "perkins25");
}

FiniteMonoid preset(const std::string& name) {
    if (name == "L") return monoid_L();
    if (name == "L1") return monoid_L1();
    if (name == "A0") return monoid_A0();
    if (name == "A01") return monoid_A01();
    if (name == "A2") return monoid_A2();
    if (name == "A21") return monoid_A21();
    if (name == "brandt") return brandt();
    if (name == "perkins25") return perkins25();
    if (name == "reflexive2") return reflexive_relations(2);
    if (name == "reflexive3") return reflexive_relations(3);
    if (name == "reflexive4") return reflexive_relations(4);
    if (name == "ut3") return triangular_boolean(3, true);
    if (name == "ut4") return triangular_boolean(4, true);
    if (name == "ut5") return triangular_boolean(5, true);
    std::ostringstream os;
    os << "unknown preset '" << name << "'; known:";
    for (const auto& p : preset_names()) os << ' ' << p;
    throw ValidationError(os.str());
}

std::vector<std::string> preset_names() {
    return {"L",   "L1",    "A0",    "A01",   "A2",  "A21", "brandt",
            "perkins25", "reflexive2", "reflexive3", "reflexive4",
            "ut3", "ut4", "ut5"};
}

} // namespace nfb
