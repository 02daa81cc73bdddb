#include "doctest.h"

#include "nfb/decide.hpp"
#include "nfb/presets.hpp"

using namespace nfb;

namespace {

Elem by_name(const FiniteMonoid& m, const std::string& name) {
    for (Elem e = 0; e < m.order; ++e)
        if (m.elem_name(e) == name) return e;
    throw std::runtime_error("no element named " + name);
}

Assignment assign(const FiniteMonoid& m,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
    Assignment a;
    for (const auto& [var, elem] : pairs) a[make_variable(var)] = by_name(m, elem);
    return a;
}

bool witness_checks(const FiniteMonoid& m, const Identity& id, const Verdict& v) {
    REQUIRE(v.witness.has_value());
    return eval_word(m, id.lhs, *v.witness) != eval_word(m, id.rhs, *v.witness);
}

} // namespace

TEST_CASE("eval_word folds letters through the table") {
    auto l1 = monoid_L1();
    CHECK(l1.elem_name(eval_word(l1, parse_word("xyx"), assign(l1, {{"x", "a"}, {"y", "b"}}))) ==
          "0");
    CHECK(l1.elem_name(eval_word(l1, parse_word("x y"), assign(l1, {{"x", "a"}, {"y", "b"}}))) ==
          "ab");
    CHECK(l1.elem_name(eval_word(l1, Word{}, {})) == "1");
    CHECK_THROWS_AS(eval_word(l1, parse_word("x"), {}), ValidationError);
    auto l = monoid_L();
    CHECK_THROWS_AS(eval_word(l, Word{}, {}), ValidationError);
}

TEST_CASE("satisfies: search route") {
    auto l = monoid_L();
    auto held = satisfies(l, parse_identity("xx = xxx"));
    CHECK(held.holds());
    CHECK(held.route == "search");

    auto b = preset("brandt");
    auto id = parse_identity("xyxy = xyyx");
    auto failed = satisfies(b, id);
    CHECK(!failed.holds());
    CHECK(failed.route == "search");
    CHECK(witness_checks(b, id, failed));
    // lexicographically least counterexample: x -> a, y -> b
    CHECK(*failed.witness == assign(b, {{"x", "a"}, {"y", "b"}}));

    // trivial identities short-circuit without needing an identity element
    auto trivial = satisfies(l, parse_identity("xyx = xyx"));
    CHECK(trivial.holds());
    CHECK(trivial.route == "syntactic");

    CHECK_THROWS_AS(satisfies(l, parse_identity("x = 1")), ValidationError);
    auto l1 = monoid_L1();
    auto empty_side = satisfies(l1, parse_identity("x = 1"));
    CHECK(!empty_side.holds());
    CHECK(*empty_side.witness == assign(l1, {{"x", "a"}}));
}

TEST_CASE("satisfies: budget and workers") {
    auto p = preset("perkins25");
    SatisfyOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(satisfies(p, parse_identity("xyzzyx = xzyyzx"), tiny), CapError);

    auto b = preset("brandt");
    auto id = parse_identity("xyxy = xyyx");
    SatisfyOptions two;
    two.workers = 2;
    auto parallel = satisfies(b, id, two);
    auto serial = satisfies(b, id);
    CHECK(parallel.status == serial.status);
    CHECK(*parallel.witness == *serial.witness);
    auto held = satisfies(b, parse_identity("xxx = xxxx"), two);
    CHECK(held.holds());
}

TEST_CASE("satisfies: jm-oracle route") {
    auto r2 = preset("reflexive2");
    auto held = satisfies(r2, parse_identity("xy = yx"));
    CHECK(held.holds());
    CHECK(held.route == "jm-oracle");
    CHECK(satisfies(r2, parse_identity("x = xx")).holds());

    auto id = parse_identity("xy = x");
    auto failed = satisfies(r2, id);
    CHECK(!failed.holds());
    CHECK(failed.route == "jm-oracle");
    CHECK(failed.note.find("y") != std::string::npos);
    CHECK(witness_checks(r2, id, failed));

    auto r3 = preset("reflexive3");
    auto id2 = parse_identity("xy = yx");
    auto failed2 = satisfies(r3, id2);
    CHECK(!failed2.holds());
    CHECK(witness_checks(r3, id2, failed2));
    // agreement with a plain search on an untagged copy
    auto plain = flattened(r3);
    CHECK(!satisfies(plain, id2).holds());
    CHECK(satisfies(plain, parse_identity("xxyx = xyxx")).status ==
          satisfies(r3, parse_identity("xxyx = xyxx")).status);
}

TEST_CASE("jm tag agrees with brute force on the unitriangular monoid") {
    // the tag encodes that the monoid's equational theory is exactly the
    // depth-2 subword equivalence; verify against exhaustive search on an
    // untagged copy over all word pairs on {x, y} up to length 4
    auto u3 = preset("ut3");
    REQUIRE(u3.jm_theory_level == std::size_t{2});
    auto plain = flattened(u3);

    std::vector<Word> words{Word{}};
    Variable vx = make_variable("x"), vy = make_variable("y");
    std::size_t start = 0;
    for (int len = 1; len <= 4; ++len) {
        std::size_t stop = words.size();
        for (std::size_t i = start; i < stop; ++i)
            for (const Variable& v : {vx, vy}) {
                Word w = words[i];
                w.push_back(v);
                words.push_back(w);
            }
        start = stop;
    }
    REQUIRE(words.size() == 31);
    for (const auto& lhs : words)
        for (const auto& rhs : words) {
            Identity id{lhs, rhs};
            CHECK(satisfies(u3, id).holds() == satisfies(plain, id).holds());
        }

    // the free-diagonal variant refutes the depth-2 pair x^2 = x^3 through
    // its nilpotent shift, so it genuinely needs the untagged slow path
    auto free3 = triangular_boolean(3, false);
    auto refuted = satisfies(free3, parse_identity("x^2 = x^3"));
    CHECK(!refuted.holds());
    CHECK(refuted.route == "search");
    CHECK(jm_equivalent(parse_word("x^2"), parse_word("x^3"), 2));
}

TEST_CASE("satisfies: factored route") {
    auto prod = direct_product(monoid_L1(), monoid_A01());
    auto held = satisfies(prod, parse_identity("xx = xxx"));
    CHECK(held.holds());
    CHECK(held.route == "factored");

    auto id = parse_identity("xy = yx");
    auto failed = satisfies(prod, id);
    CHECK(!failed.holds());
    CHECK(failed.route == "factored");
    CHECK(failed.note.find("factor 0") != std::string::npos);
    CHECK(witness_checks(prod, id, failed));
    // lifted from the first factor's least witness (x -> a, y -> b in L^1)
    CHECK((*failed.witness)[make_variable("x")] == by_name(monoid_L1(), "a") * 5);
    CHECK((*failed.witness)[make_variable("y")] == by_name(monoid_L1(), "b") * 5);
}

TEST_CASE("equivalence_class windows") {
    auto l1 = monoid_L1();
    auto cls = equivalence_class(l1, parse_word("x t x"), 5);
    CHECK(cls.count(parse_word("x t x")) == 1);
    CHECK(cls.size() > 1); // xtx is not an isoterm for L^1

    auto s = dilworth({parse_word("xyyx")});
    auto frozen = equivalence_class(s, parse_word("xyyx"), 4);
    CHECK(frozen == std::set<Word>{parse_word("xyyx")});

    // members are mutually equivalent (spot-check transitivity)
    std::vector<Word> members(cls.begin(), cls.end());
    for (std::size_t i = 0; i + 1 < members.size() && i < 4; ++i)
        CHECK(satisfies(l1, Identity{members[i], members[i + 1]}).holds());

    CHECK_THROWS_AS(equivalence_class(l1, parse_word("xy"), 24), CapError);
}

TEST_CASE("power_isoterm") {
    auto l1 = monoid_L1();
    auto not_iso = power_isoterm(l1, 2);
    CHECK(not_iso.status == IsotermVerdict::Status::NotIsoterm);
    CHECK(render(*not_iso.witness) == "x x x");

    auto s = dilworth({parse_word("xyyx")});
    auto iso = power_isoterm(s, 2);
    CHECK(iso.status == IsotermVerdict::Status::Isoterm);
    CHECK(!iso.certificate.empty());

    CHECK(power_isoterm(preset("brandt"), 1).status == IsotermVerdict::Status::Isoterm);

    // all reflexive relations are idempotent: x is not even an isoterm
    auto single = power_isoterm(preset("reflexive2"), 1);
    CHECK(single.status == IsotermVerdict::Status::NotIsoterm);
    CHECK(render(*single.witness) == "x x");

    // a group collapses x to x^(1 + exponent)
    auto c2 = from_rules({parse_rule("aa -> 1")});
    auto grp = power_isoterm(c2, 1);
    CHECK(grp.status == IsotermVerdict::Status::NotIsoterm);
    CHECK(render(*grp.witness) == "x x x");

    CHECK_THROWS_AS(power_isoterm(monoid_L(), 1), ValidationError);
    CHECK_THROWS_AS(power_isoterm(l1, 0), ValidationError);
}

TEST_CASE("is_isoterm") {
    auto s = dilworth({parse_word("xyyx")});
    auto exact = is_isoterm(s, parse_word("xyyx"));
    CHECK(exact.status == IsotermVerdict::Status::Isoterm);
    CHECK(exact.certificate.find("6 letter-multiset") != std::string::npos);
    CHECK(!exact.bound.has_value());

    auto l1 = monoid_L1();
    auto refuted = is_isoterm(l1, parse_word("x t x"), 6);
    CHECK(refuted.status == IsotermVerdict::Status::NotIsoterm);
    REQUIRE(refuted.witness.has_value());
    CHECK(*refuted.witness != parse_word("x t x"));
    CHECK(satisfies(l1, Identity{parse_word("x t x"), *refuted.witness}).holds());

    // semigroup path: no identity element, so the search is bounded and skips
    // the empty candidate; border powers collapse in L, refuting xyyx
    auto collapsed = is_isoterm(monoid_L(), parse_word("xyyx"));
    CHECK(collapsed.status == IsotermVerdict::Status::NotIsoterm);
    REQUIRE(collapsed.witness.has_value());
    CHECK(render(*collapsed.witness) == "x x y y x");
    CHECK(satisfies(monoid_L(), Identity{parse_word("xyyx"), *collapsed.witness}).holds());

    // bounded verdict is labeled with its window: the Brandt monoid satisfies
    // x^2 = x^3, so exact mode is unavailable, yet xytyx has no equivalent
    // word within the window
    auto bounded = is_isoterm(preset("brandt"), parse_word("x y t y x"), 6);
    CHECK(bounded.status == IsotermVerdict::Status::IsotermUpToBound);
    CHECK(bounded.bound == 6);
}

TEST_CASE("stability with respect to a monoid") {
    auto l1 = monoid_L1();
    std::vector<OccRef> set = {OccRef{make_variable("x"), 1}, OccRef{make_variable("t"), 1}};
    auto pass = l_stable_wrt(l1, parse_word("x t x"), set, 5);
    CHECK(pass.status == CheckReport::Status::BoundedPass);
    CHECK(pass.bound == 5);

    auto empty = l_stable_wrt(l1, parse_word("x t x"), {}, 5);
    CHECK(empty.passed());

    CHECK_THROWS_AS(
        l_stable_wrt(l1, parse_word("x t x"), {OccRef{make_variable("x"), 3}}, 5),
        ValidationError);

    auto occ_fail = var_stable_wrt(l1, parse_word("x t x"), make_variable("x"), 5);
    CHECK(occ_fail.status == CheckReport::Status::Fail);
    REQUIRE(occ_fail.witness.has_value());
    CHECK(occ(*occ_fail.witness, make_variable("x")) != 2);

    auto absent = var_stable_wrt(l1, parse_word("x t x"), make_variable("q"), 4);
    CHECK(absent.passed());

    auto s = dilworth({parse_word("xyyx")});
    auto proj = varset_stable_wrt(s, parse_word("xyyx"), {make_variable("x")}, 4);
    CHECK(proj.passed());
}

TEST_CASE("class shapes") {
    Word u = parse_word("x x y y");
    ShapeTemplate pair{ShapeTemplate::Kind::PowerPair, make_variable("x"), make_variable("y")};
    CHECK(matches_shape(parse_word("x x y y"), pair, u));
    CHECK(matches_shape(parse_word("xxxyy"), pair, u));
    CHECK(!matches_shape(parse_word("x y y"), pair, u));
    CHECK(!matches_shape(parse_word("x x y"), pair, u));
    CHECK(!matches_shape(parse_word("x x x"), pair, u));
    CHECK(!matches_shape(parse_word("x x y y x"), pair, u));

    ShapeTemplate sandwich{ShapeTemplate::Kind::PowerSandwich, make_variable("x"),
                           make_variable("y")};
    CHECK(matches_shape(parse_word("x y y x"), sandwich, u));
    CHECK(matches_shape(parse_word("x x y y x"), sandwich, u));
    CHECK(!matches_shape(parse_word("x y x"), sandwich, u));
    CHECK(!matches_shape(parse_word("y y x"), sandwich, u));

    auto l1 = monoid_L1();
    CHECK(class_shape(l1, parse_word("x x y y"), pair, 7).passed());
    CHECK(class_shape(l1, parse_word("x y y x"), sandwich, 7).passed());

    ShapeTemplate exact_at{ShapeTemplate::Kind::ExactAtOcc, make_variable("x"), {}};
    CHECK(matches_shape(parse_word("x x y"), exact_at, parse_word("x x y")));
    CHECK(matches_shape(parse_word("x y"), exact_at, parse_word("x x y")));
    CHECK(!matches_shape(parse_word("x y x"), exact_at, parse_word("x x y")));

    auto s = dilworth({parse_word("xyyx")});
    CHECK(class_shape(s, parse_word("xyyx"), exact_at, 4).passed());

    // reflexive(2) identifies all words with equal letter sets and counts,
    // so the same-occurrence slice of the class is bigger than {u}
    auto r2 = preset("reflexive2");
    auto broken = class_shape(r2, parse_word("x y x"), exact_at, 4);
    CHECK(broken.status == CheckReport::Status::Fail);
    CHECK(render(*broken.witness) == "x x y");
}
