#include "doctest.h"

#include <filesystem>

#include "nfb/monoid_io.hpp"
#include "nfb/monoids.hpp"
#include "nfb/presets.hpp"

using namespace nfb;

namespace {

Elem by_name(const FiniteMonoid& M, const std::string& s) {
    for (Elem e = 0; e < M.order; ++e)
        if (M.names[e] == s) return e;
    FAIL("no element named ", s, " in ", M.name);
    return 0;
}

Elem word_elem(const FiniteMonoid& M, const std::string& letters) {
    std::vector<Elem> seq;
    for (char c : letters) seq.push_back(M.generators.at(std::string(1, c)));
    return M.eval(seq);
}

} // namespace

TEST_CASE("L: six elements in discovery order, zero, no identity") {
    FiniteMonoid L = monoid_L();
    CHECK(L.order == 6);
    CHECK(L.names == std::vector<std::string>{"a", "b", "ab", "ba", "0", "bab"});
    CHECK(!L.identity.has_value());
    REQUIRE(L.zero.has_value());
    CHECK(L.names[*L.zero] == "0");
    CHECK(word_elem(L, "aba") == *L.zero);
    CHECK(word_elem(L, "bab") == by_name(L, "bab"));
    CHECK(word_elem(L, "babbab") == *L.zero); // bb collapses, then aba
    CHECK(is_aperiodic(L));
}

TEST_CASE("L1: identity adjoined at index 0") {
    FiniteMonoid M = monoid_L1();
    CHECK(M.order == 7);
    REQUIRE(M.identity.has_value());
    CHECK(*M.identity == 0);
    CHECK(M.names[0] == "1");
    CHECK(M.mul(0, by_name(M, "bab")) == by_name(M, "bab"));

    PowerCycle pc = power_cycle(M, by_name(M, "ab"));
    CHECK(pc.index == 2);
    CHECK(pc.period == 1);
    std::size_t max_index = 0;
    for (Elem e = 0; e < M.order; ++e) max_index = std::max(max_index, power_cycle(M, e).index);
    CHECK(max_index == 2);
    CHECK(is_aperiodic(M));
}

TEST_CASE("A0 family orders and zero placement") {
    FiniteMonoid A0 = monoid_A0();
    CHECK(A0.order == 4);
    CHECK(A0.names == std::vector<std::string>{"a", "b", "0", "ba"});
    CHECK(word_elem(A0, "ab") == *A0.zero);
    CHECK(word_elem(A0, "ba") == by_name(A0, "ba"));
    CHECK(monoid_A01().order == 5);

    FiniteMonoid A2 = monoid_A2();
    CHECK(A2.order == 5);
    CHECK(word_elem(A2, "aba") == word_elem(A2, "a"));
    CHECK(word_elem(A2, "bb") == *A2.zero);
    CHECK(is_aperiodic(A2));
    CHECK(monoid_A21().order == 6);
}

TEST_CASE("Brandt monoid: order six, identity, inverse-like relations") {
    FiniteMonoid B = brandt();
    CHECK(B.order == 6);
    REQUIRE(B.identity.has_value());
    CHECK(*B.identity == 0);
    CHECK(B.names[0] == "1");
    CHECK(word_elem(B, "aba") == word_elem(B, "a"));
    CHECK(word_elem(B, "bab") == word_elem(B, "b"));
    CHECK(word_elem(B, "aa") == *B.zero);
    CHECK(word_elem(B, "bb") == *B.zero);
    Elem ab = word_elem(B, "ab");
    CHECK(B.mul(ab, ab) == ab); // ab is idempotent
    CHECK(is_aperiodic(B));
}

TEST_CASE("factor-word monoid of {ata}: seven elements, shortlex layout") {
    FiniteMonoid M = dilworth({parse_word("ata")});
    CHECK(M.order == 7);
    CHECK(M.names == std::vector<std::string>{"1", "a", "t", "at", "ta", "ata", "0"});
    CHECK(*M.identity == 0);
    CHECK(*M.zero == 6);
    CHECK(M.mul(by_name(M, "at"), by_name(M, "a")) == by_name(M, "ata"));
    CHECK(M.mul(by_name(M, "a"), by_name(M, "a")) == *M.zero);  // aa is not a factor
    CHECK(M.mul(by_name(M, "t"), by_name(M, "at")) == *M.zero); // tat is not a factor
    CHECK(M.grades[by_name(M, "ata")] == 3);
    CHECK(M.grades[*M.zero] == kGradeZero);
    CHECK(M.generators.at("a") == by_name(M, "a"));
}

TEST_CASE("factor-word monoid sizes stay pinned") {
    CHECK(dilworth({parse_word("x")}).order == 3);
    CHECK(dilworth({parse_word("a t1 a t2 a")}).order == 15);
    CHECK(perkins25().order == 25);

    FiniteMonoid M = dilworth({parse_word("xyyx")});
    PowerCycle pc = power_cycle(M, by_name(M, "y"));
    CHECK(pc.index == 3); // y, yy, then the zero
    CHECK(pc.period == 1);
    CHECK(is_aperiodic(perkins25()));
}

TEST_CASE("reflexive relation monoids: orders, ends, a concrete product") {
    FiniteMonoid R2 = reflexive_relations(2);
    CHECK(R2.order == 4);
    FiniteMonoid R3 = reflexive_relations(3);
    CHECK(R3.order == 64);
    CHECK(*R3.identity == 0);
    CHECK(*R3.zero == 63);
    CHECK(R3.jm_theory_level == std::size_t{2});
    // edge (0,1) composed with edge (1,2) adds the shortcut (0,2):
    // free bits for k=3 are (0,1) (0,2) (1,0) (1,2) (2,0) (2,1).
    CHECK(R3.mul(1, 8) == 11);
    CHECK(R3.mul(8, 1) == 9); // no shortcut the other way round
    CHECK(reflexive_relations(4).order == 4096);
    CHECK_THROWS_AS(reflexive_relations(5), ValidationError);
}

TEST_CASE("triangular Boolean monoids: unit and free diagonal") {
    FiniteMonoid U3 = triangular_boolean(3, true);
    CHECK(U3.order == 8);
    CHECK(*U3.identity == 0);
    CHECK(*U3.zero == 7);
    CHECK(U3.jm_theory_level == std::size_t{2});
    CHECK(triangular_boolean(4, true).order == 64);
    CHECK(triangular_boolean(4, true).jm_theory_level == std::size_t{3});
    CHECK(triangular_boolean(5, true).order == 1024);

    FiniteMonoid T3 = triangular_boolean(3, false);
    CHECK(T3.order == 64);
    // the superdiagonal shift N has N^2 != N^3 = 0, so the free-diagonal
    // monoid refutes x^2 = x^3 (a level-2 subword pair) and carries no tag
    CHECK(!T3.jm_theory_level.has_value());
    {
        // N = E12 + E23: free bits for k=3 are (0,0)(0,1)(0,2)(1,1)(1,2)(2,2),
        // so N sets bits 1 and 4
        Elem shift = 18;
        Elem sq = T3.mul(shift, shift);
        CHECK(sq == 4);              // E13 alone
        CHECK(T3.mul(sq, shift) == 0); // N^3 = 0
    }
    // identity = diagonal bits among free positions (0,0)(0,1)(0,2)(1,1)(1,2)(2,2)
    CHECK(*T3.identity == 41);
    CHECK(*T3.zero == 0);
    CHECK(is_aperiodic(U3));
    CHECK(is_aperiodic(T3));
    CHECK_THROWS_AS(triangular_boolean(6, true), ValidationError);
}

TEST_CASE("rewrite presentations: group detection and failure modes") {
    FiniteMonoid C2 = from_rules({parse_rule("aa -> 1")});
    CHECK(C2.order == 2);
    REQUIRE(C2.identity.has_value());
    CHECK(!is_aperiodic(C2));
    PowerCycle pc = power_cycle(C2, C2.generators.at("a"));
    CHECK(pc.index == 1);
    CHECK(pc.period == 2);

    CHECK_THROWS_AS(parse_rule("a -> ab"), ValidationError);    // growing
    CHECK_THROWS_AS(parse_rule("ab = ba"), ParseError);         // wrong arrow
    CHECK_THROWS_AS(parse_rule("1 -> a"), ParseError);          // empty left side
    // aa -> a shadows aaa -> 0, so the zero is never reached
    CHECK_THROWS_AS(from_rules({parse_rule("aa -> a"), parse_rule("aaa -> 0")}),
                    ValidationError);
    // x^2 = x^3 on one generator: the three-element flip-flop chain
    FiniteMonoid M = from_rules({parse_rule("aaa -> aa")});
    CHECK(M.order == 2);
    CHECK(is_aperiodic(M));
}

TEST_CASE("adjoining an identity twice keeps both units distinct") {
    FiniteMonoid M = adjoin_identity(adjoin_identity(monoid_A0()));
    CHECK(M.order == 6);
    CHECK(M.names[0] == "1'"); // inner adjunction took "1"
    CHECK(M.names[1] == "1");
    CHECK(*M.identity == 0);
    CHECK(M.mul(1, 1) == 1); // the old unit is still idempotent, just not neutral
}

TEST_CASE("direct product: componentwise table, ends, factor handles") {
    FiniteMonoid P = direct_product(monoid_L1(), monoid_A01());
    CHECK(P.order == 35);
    REQUIRE(P.identity.has_value());
    CHECK(P.names[*P.identity] == "(1,1)");
    REQUIRE(P.zero.has_value());
    REQUIRE(P.factors.size() == 2);
    CHECK(P.factors[0]->order == 7);
    CHECK(P.factors[1]->order == 5);

    FiniteMonoid L1 = monoid_L1(), A01 = monoid_A01();
    for (Elem a1 : {Elem(1), Elem(3)})
        for (Elem b1 : {Elem(0), Elem(2)})
            for (Elem a2 : {Elem(2), Elem(6)})
                for (Elem b2 : {Elem(1), Elem(4)}) {
                    Elem p = P.mul(static_cast<Elem>(a1 * 5 + b1), static_cast<Elem>(a2 * 5 + b2));
                    CHECK(p == L1.mul(a1, a2) * 5 + A01.mul(b1, b2));
                }

    FiniteMonoid F = flattened(P);
    CHECK(F.factors.empty());
    CHECK(F.order == 35);
}

TEST_CASE("product order cap is a hard error") {
    FiniteMonoid R3 = reflexive_relations(3); // 64
    FiniteMonoid R4 = reflexive_relations(4); // 4096
    CHECK_THROWS_AS(direct_product(R3, R4), CapError);
}

TEST_CASE("json round trip preserves everything validation sees") {
    FiniteMonoid M = perkins25();
    auto path = (std::filesystem::temp_directory_path() / "nfb_roundtrip.json").string();
    save_monoid(M, path);
    FiniteMonoid N = load_monoid(path);
    CHECK(N.order == M.order);
    CHECK(N.table == M.table);
    CHECK(N.names == M.names);
    CHECK(N.identity == M.identity);
    CHECK(N.zero == M.zero);
    CHECK(N.grades == M.grades);
    CHECK(N.generators == M.generators);
    std::filesystem::remove(path);

    FiniteMonoid R = reflexive_relations(2);
    auto j = to_json(R);
    CHECK(j["jm_theory_level"] == 1);
    FiniteMonoid R2 = monoid_from_json(j);
    CHECK(R2.jm_theory_level == std::size_t{1});

    // products keep their factor handles through a round trip, so the
    // factored decision route survives save/load
    auto pj = to_json(direct_product(monoid_A0(), monoid_A01()));
    FiniteMonoid P2 = monoid_from_json(pj);
    REQUIRE(P2.factors.size() == 2);
    CHECK(P2.factors[0]->order == monoid_A0().order);
    CHECK(P2.factors[1]->names == monoid_A01().names);
    CHECK(P2.table == direct_product(monoid_A0(), monoid_A01()).table);
}

TEST_CASE("a corrupted table is rejected on load") {
    auto j = to_json(monoid_L());
    j["table"][2][3] = 0; // break ab * ba
    CHECK_THROWS_AS(monoid_from_json(j), ValidationError);
    auto j2 = to_json(monoid_L());
    j2["identity"] = 1; // b is not neutral
    CHECK_THROWS_AS(monoid_from_json(j2), ValidationError);
    auto j3 = to_json(monoid_L());
    j3.erase("names");
    CHECK_THROWS_AS(monoid_from_json(j3), ParseError);

    // factors that disagree with the product table are rejected, whether
    // the tampering hits the product or a nested factor
    auto j4 = to_json(direct_product(monoid_A0(), monoid_A0()));
    j4["table"][5][5] = (j4["table"][5][5].get<int>() + 1) % 16;
    CHECK_THROWS_AS(monoid_from_json(j4), ValidationError);
    auto j5 = to_json(direct_product(monoid_A0(), monoid_A0()));
    j5["factors"][1]["table"][1][2] = (j5["factors"][1]["table"][1][2].get<int>() + 1) % 4;
    CHECK_THROWS_AS(monoid_from_json(j5), ValidationError);
}

TEST_CASE("presets resolve by name") {
    CHECK(preset("brandt").order == 6);
    CHECK(preset("ut4").order == 64);
    CHECK_THROWS_AS(preset("nope"), ValidationError);
    for (const auto& name : preset_names()) CHECK(preset(name).order >= 2);
}

TEST_CASE("empty product needs an identity") {
    CHECK_THROWS_AS(monoid_L().eval({}), ValidationError);
    CHECK(monoid_L1().eval({}) == 0);
}
