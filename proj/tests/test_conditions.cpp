#include "doctest.h"

#include "nfb/conditions.hpp"
#include "nfb/decide.hpp"
#include "nfb/monoids.hpp"
#include "nfb/presets.hpp"
#include "nfb/report.hpp"
#include "nfb/words.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace nfb;

namespace {

const HypothesisReport& hyp(const ConditionReport& rep, const std::string& id) {
    auto it = std::find_if(rep.hypotheses.begin(), rep.hypotheses.end(),
                           [&](const HypothesisReport& h) { return h.id == id; });
    REQUIRE_MESSAGE(it != rep.hypotheses.end(), "missing hypothesis ", id);
    return *it;
}

std::vector<std::string> failing_ids(const ConditionReport& rep) {
    std::vector<std::string> out;
    for (const auto& h : rep.hypotheses)
        if (!h.passed()) out.push_back(h.id);
    return out;
}

FiniteMonoid trivial_monoid() {
    FiniteMonoid t;
    t.name = "trivial";
    t.order = 1;
    t.identity = 0;
    t.names = {"1"};
    t.table = {0};
    validate(t);
    return t;
}

} // namespace

TEST_CASE("sl1 checker: L1 passes everything, the trivial monoid only (i)") {
    auto L1 = monoid_L1();
    auto rep = check_sl1(L1, {2, 3}, 8);
    CHECK(rep.condition == "sl1");
    CHECK(rep.monoid == "L1");
    CHECK(rep.all_pass());
    CHECK(rep.first_failure() == nullptr);
    CHECK(rep.scale_note == std::string(kScaleNote));
    // 2 scheme instances + 4 stability grid points + 3 + 3 shape grid points.
    CHECK(rep.hypotheses.size() == 12);
    CHECK(hyp(rep, "i:n=2").status == CheckReport::Status::Pass);
    CHECK(hyp(rep, "ii:m=2,c=2").status == CheckReport::Status::BoundedPass);
    CHECK(hyp(rep, "ii:m=2,c=2").bound == 8);
    CHECK(hyp(rep, "iii:x^3y^2").status == CheckReport::Status::BoundedPass);
    CHECK(hyp(rep, "iv:x^2y^2x^1").status == CheckReport::Status::BoundedPass);

    // The trivial monoid satisfies every identity, so (i) holds, but every
    // class contains the empty word, which breaks stability and shape alike.
    auto triv = trivial_monoid();
    auto trep = check_sl1(triv, {2, 2}, 6);
    CHECK_FALSE(trep.all_pass());
    REQUIRE(trep.first_failure() != nullptr);
    CHECK(trep.first_failure()->id == "ii:m=1,c=1");
    CHECK(hyp(trep, "i:n=2").passed());
    for (const auto& h : trep.hypotheses) {
        if (h.id[0] == 'i' && h.id[1] == ':') continue;
        CHECK_FALSE(h.passed());
        REQUIRE(h.witness_word.has_value());
        CHECK(h.witness_word->empty());
    }
}

TEST_CASE("table-row checker: S({xyyx}) passes row 1, Brandt fails (a)") {
    auto S = dilworth({parse_word("x y y x")});
    auto rep = check_table_row(S, 1, {}, {2, 3});
    CHECK(rep.condition == "row1");
    CHECK(rep.all_pass());
    CHECK(rep.hypotheses.size() == 3);
    // The word check is exact: no bound on the verdict.
    CHECK(hyp(rep, "a:xyyx").status == CheckReport::Status::Pass);
    CHECK_FALSE(hyp(rep, "a:xyyx").bound.has_value());

    auto B = preset("brandt");
    auto brep = check_table_row(B, 1, {}, {2, 2});
    CHECK_FALSE(brep.all_pass());
    REQUIRE(brep.first_failure() != nullptr);
    CHECK(brep.first_failure()->id == "a:xyyx");
    const auto& a = hyp(brep, "a:xyyx");
    REQUIRE(a.witness_word.has_value());
    CHECK(render(*a.witness_word) == "x x y y");
    REQUIRE(a.identity.has_value());
    CHECK(satisfies(B, *a.identity).holds());
    CHECK(hyp(brep, "b:n=2").passed());
}

TEST_CASE("psc checker: Brandt passes, L1 fails the scheme and both isoterms") {
    auto B = preset("brandt");
    auto rep = check_psc(B, {2, 3}, 7);
    CHECK(rep.all_pass());
    CHECK(rep.hypotheses.size() == 5);
    CHECK(hyp(rep, "i:n=3").status == CheckReport::Status::Pass);
    // (ii) is a must-fail: passing means the collapse identity has a
    // counter-assignment, recorded for re-checking.
    const auto& ii = hyp(rep, "ii:not(xyxy=xyyx)");
    CHECK(ii.passed());
    REQUIRE(ii.witness_assignment.has_value());
    REQUIRE(ii.identity.has_value());
    CHECK_FALSE(satisfies(B, *ii.identity).holds());
    CHECK(hyp(rep, "iii:xytyx").status == CheckReport::Status::BoundedPass);
    CHECK(hyp(rep, "iii:xytyx").bound == 7);

    auto L1 = monoid_L1();
    auto lrep = check_psc(L1, {2, 2}, 6);
    CHECK_FALSE(lrep.all_pass());
    REQUIRE(lrep.first_failure() != nullptr);
    CHECK(lrep.first_failure()->id == "i:n=2");
    CHECK(hyp(lrep, "ii:not(xyxy=xyyx)").passed());
    const auto& w1 = hyp(lrep, "iii:xytyx");
    CHECK_FALSE(w1.passed());
    REQUIRE(w1.witness_word.has_value());
    CHECK(render(*w1.witness_word) == "x x y t y x");
    REQUIRE(w1.identity.has_value());
    CHECK(satisfies(L1, *w1.identity).holds());
    const auto& w2 = hyp(lrep, "iii:xtyxy");
    CHECK_FALSE(w2.passed());
    REQUIRE(w2.witness_word.has_value());
    CHECK(render(*w2.witness_word) == "x t x y x y");
}

TEST_CASE("el checker: the semigroup L passes at k=2, Brandt does not") {
    auto L = monoid_L();
    REQUIRE_FALSE(L.identity.has_value());
    auto rep = check_el(L, 2, {2, 3});
    CHECK(rep.condition == "el k=2");
    CHECK(rep.all_pass());
    CHECK(rep.hypotheses.size() == 6);
    // The must-fail hypothesis carries the refuting assignment.
    const auto& e1 = hyp(rep, "ii:e1");
    CHECK(e1.passed());
    REQUIRE(e1.witness_assignment.has_value());
    REQUIRE(e1.identity.has_value());
    auto v = satisfies(L, *e1.identity);
    CHECK_FALSE(v.holds());
    CHECK(eval_word(L, e1.identity->lhs, *e1.witness_assignment) !=
          eval_word(L, e1.identity->rhs, *e1.witness_assignment));
    CHECK(hyp(rep, "iii:e2a").passed());
    CHECK(hyp(rep, "iii:e2b").passed());
    CHECK(hyp(rep, "iii:e2c").passed());

    // Brandt satisfies the must-fail identity e1 and refutes both
    // asymmetric absorption identities via x -> a, y -> b.
    auto B = preset("brandt");
    auto brep = check_el(B, 2, {2, 2});
    CHECK_FALSE(brep.all_pass());
    CHECK(failing_ids(brep) ==
          std::vector<std::string>{"ii:e1", "iii:e2b", "iii:e2c"});
    CHECK(hyp(brep, "ii:e1").detail.find("unexpectedly holds") != std::string::npos);
    const auto& e2b = hyp(brep, "iii:e2b");
    REQUIRE(e2b.witness_assignment.has_value());
    REQUIRE(e2b.identity.has_value());
    CHECK(eval_word(B, e2b.identity->lhs, *e2b.witness_assignment) !=
          eval_word(B, e2b.identity->rhs, *e2b.witness_assignment));
}

TEST_CASE("bsnew checker: UT1_4 fails exactly the middle-power isoterm") {
    auto M = preset("ut4");
    auto rep = check_bsnew(M, 3, {2, 3});
    CHECK(rep.condition == "bsnew m=3");
    CHECK(rep.hypotheses.size() == 7);
    CHECK_FALSE(rep.all_pass());
    CHECK(failing_ids(rep) == std::vector<std::string>{"iii:x t1 x t2 x"});

    // The scheme instances ride the subword-theory tag, and the largest
    // feasible n is cross-checked against plain exhaustive search.
    CHECK(hyp(rep, "i:n=2").detail.find("jm-oracle") != std::string::npos);
    CHECK(hyp(rep, "i:cross-check").passed());
    CHECK(hyp(rep, "i:cross-check").detail.find("agree at n=3") != std::string::npos);

    // Both power isoterms are exact (every unitriangular element has
    // nilpotent part of index at most 3, so powers stabilize at 3).
    CHECK(hyp(rep, "ii:xyyx").status == CheckReport::Status::Pass);
    CHECK(hyp(rep, "ii:x^2").status == CheckReport::Status::Pass);

    // The refutation is the shortest and lexicographically least equivalent
    // word: lengthening the middle power preserves all subwords up to 3.
    const auto& iii = hyp(rep, "iii:x t1 x t2 x");
    REQUIRE(iii.witness_word.has_value());
    CHECK(render(*iii.witness_word) == "x t1 x x t2 x");
    REQUIRE(iii.identity.has_value());
    auto verdict = satisfies(M, *iii.identity);
    CHECK(verdict.holds());

    CHECK(hyp(rep, "iv:xyxyx").status == CheckReport::Status::BoundedPass);
}

TEST_CASE("bsnew checker: S({a t1 a t2 a}) supplies the isoterm but not the powers") {
    auto S = dilworth({parse_word("a t1 a t2 a")});
    CHECK(S.order == 15);
    auto rep = check_bsnew(S, 3, {2, 3});
    CHECK_FALSE(rep.all_pass());
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->id == "ii:xyyx");
    // No theory tag, so no cross-check row: 2 + 2 + 1 + 1 hypotheses.
    CHECK(rep.hypotheses.size() == 6);
    CHECK(hyp(rep, "i:n=2").passed());
    CHECK(hyp(rep, "i:n=3").passed());
    CHECK(hyp(rep, "iii:x t1 x t2 x").status == CheckReport::Status::BoundedPass);
    CHECK(hyp(rep, "iii:x t1 x t2 x").bound == 7);
    const auto& sq = hyp(rep, "ii:x^2");
    CHECK_FALSE(sq.passed());
    REQUIRE(sq.witness_word.has_value());
    CHECK(render(*sq.witness_word) == "x x x");
    const auto& iv = hyp(rep, "iv:xyxyx");
    CHECK_FALSE(iv.passed());
    REQUIRE(iv.witness_word.has_value());
    CHECK(render(*iv.witness_word) == "x x x y y");
}

TEST_CASE("bsnew1 checker: each factor fails its own hypothesis, the product none") {
    auto A = monoid_A01();
    auto arep = check_bsnew1(A, 1, {2, 2}, 6);
    CHECK(arep.condition == "bsnew1 m=1");
    CHECK(arep.hypotheses.size() == 5);
    CHECK(failing_ids(arep) == std::vector<std::string>{"ii:d=1"});
    const auto& ii = hyp(arep, "ii:d=1");
    REQUIRE(ii.witness_word.has_value());
    CHECK(render(*ii.witness_word) == "x t x x");

    auto S = dilworth({parse_word("a t a")});
    auto srep = check_bsnew1(S, 1, {2, 2}, 6);
    CHECK(failing_ids(srep) ==
          std::vector<std::string>{"iii:x^2y^2", "iii:x^2y^3", "iii:x^3y^2"});
    const auto& iii = hyp(srep, "iii:x^2y^2");
    REQUIRE(iii.witness_word.has_value());
    CHECK(render(*iii.witness_word) == "x y x y");
    // The violating member really is equivalent to x^2 y^2 over S({ata}).
    CHECK(satisfies(S, Identity{parse_word("x x y y"), *iii.witness_word}).holds());

    auto P = direct_product(A, S);
    CHECK(P.order == A.order * S.order);
    auto prep = check_bsnew1(P, 1, {2, 2}, 6);
    CHECK(prep.all_pass());
    CHECK(hyp(prep, "i:n=2").detail.find("factored") != std::string::npos);
    CHECK(hyp(prep, "ii:d=1").status == CheckReport::Status::BoundedPass);
    CHECK(hyp(prep, "iii:x^3y^2").status == CheckReport::Status::BoundedPass);
}

TEST_CASE("positional adjacency and power splits over a word list") {
    auto parse_all = [](std::initializer_list<const char*> ws) {
        std::vector<Word> out;
        for (const char* w : ws) out.push_back(parse_word(w));
        return out;
    };

    // Singleton and two-word lists where every adjacent pair of the doubled
    // letter is a first/last pair and every split exponent is realized.
    CHECK(check_corollary_alg(parse_all({"a t a"}), 1).passed());
    CHECK(check_corollary_alg(parse_all({"a a t a", "a t a a"}), 2).passed());
    CHECK(check_corollary_alg(
              parse_all({"a a a t a", "a t a a a", "a a t a a"}), 3)
              .passed());

    // A lone power has no second run, so no split exists.
    auto no_split = check_corollary_alg(parse_all({"a a"}), 2);
    CHECK_FALSE(no_split.passed());
    CHECK(no_split.detail.find("(b) fails") != std::string::npos);

    // Two non-linear letters collide: the first x is adjacent to the first
    // y, which pairs first-with-first rather than first-with-last.
    auto adjacency = check_corollary_alg(parse_all({"x y y x"}), 2);
    CHECK_FALSE(adjacency.passed());
    CHECK(adjacency.detail.find("(a) fails") != std::string::npos);
    REQUIRE(adjacency.witness.has_value());
    CHECK(render(*adjacency.witness) == "x y y x");

    // The declared power must match the longest factor power.
    auto mismatch = check_corollary_alg(parse_all({"a t a"}), 2);
    CHECK_FALSE(mismatch.passed());
    CHECK(mismatch.detail.find("maximal letter power") != std::string::npos);

    // Missing middle split: runs of length 1 and 3 realize d=3 (1 >= 1,
    // 3 >= 3) and d=1 (wanting 3 >= 3, 1 >= 1) only via the right words.
    auto gap = check_corollary_alg(parse_all({"a a a t a"}), 3);
    CHECK_FALSE(gap.passed());
    CHECK(gap.detail.find("(b) fails") != std::string::npos);
}

TEST_CASE("condition reports guard their inputs") {
    auto L = monoid_L();
    CHECK_THROWS_AS(check_sl1(L), ValidationError);
    CHECK_THROWS_AS(check_psc(L), ValidationError);
    CHECK_THROWS_AS(check_bsnew(L, 3), ValidationError);
    auto L1 = monoid_L1();
    CHECK_THROWS_AS(check_sl1(L1, {5, 2}), ValidationError);
    CHECK_THROWS_AS(check_sl1(L1, {1, 3}), ValidationError);
    CHECK_THROWS_AS(check_table_row(L1, 0), ValidationError);
    CHECK_THROWS_AS(check_table_row(L1, 9), ValidationError);
    CHECK_THROWS_AS(check_bsnew(L1, 2), ValidationError);
    CHECK_THROWS_AS(check_bsnew1(L1, 0), ValidationError);
    CHECK_THROWS_AS(check_el(L, 1), ValidationError);
    CHECK_THROWS_AS(check_corollary_alg({}, 1), ValidationError);
    CHECK_THROWS_AS(check_corollary_alg({Word{}}, 1), ValidationError);
}

TEST_CASE("condition reports serialize deterministically") {
    auto L1 = monoid_L1();
    auto a = condition_json(check_sl1(L1, {2, 2}, 6), L1).dump(2);
    auto b = condition_json(check_sl1(L1, {2, 2}, 6), L1).dump(2);
    CHECK(a == b);
    CHECK(a.find("\"condition\": \"sl1\"") != std::string::npos);
    CHECK(a.find("\"overall\": \"pass\"") != std::string::npos);
    CHECK(a.find("\"first_failure\": null") != std::string::npos);

    auto B = preset("brandt");
    auto jrep = condition_json(check_table_row(B, 1, {}, {2, 2}), B);
    CHECK(jrep["overall"] == "fail");
    CHECK(jrep["first_failure"] == "a:xyyx");
    CHECK(jrep["hypotheses"][0]["witness_word"] == "x x y y");
    CHECK(jrep["hypotheses"][0]["identity"] == "x y y x = x x y y");

    // Witness assignments carry element indices and display names.
    auto erep = check_el(monoid_L(), 2, {2, 2});
    auto j = condition_json(erep, monoid_L());
    bool saw_assignment = false;
    for (const auto& h : j["hypotheses"]) {
        if (h["witness_assignment"].is_null()) continue;
        saw_assignment = true;
        for (const auto& entry : h["witness_assignment"]) {
            CHECK(entry.contains("var"));
            CHECK(entry.contains("element"));
            CHECK(entry.contains("name"));
        }
    }
    CHECK(saw_assignment);
}
