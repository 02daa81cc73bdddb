#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfb/monoids.hpp"
#include "nfb/words.hpp"

// Decision procedures over a finite monoid: identity satisfaction, bounded
// equivalence-class windows, exact and bounded isoterm checks, and the
// stability-with-respect-to-M predicates built on top of them.
//
// satisfies() picks a route automatically and records it in the verdict:
// - "jm-oracle":  the monoid carries jm_theory_level; the identity holds iff
//   both sides have equal scattered-subword sets up to that length.  On a
//   failing identity a budgeted search tries to attach an element witness;
//   if the budget runs out the witness is absent and the note carries a
//   distinguishing subword instead.
// - "factored":   a direct product satisfies an identity iff every factor
//   does; the witness is lifted from the first failing factor (padding the
//   other coordinates with element 0), so it is valid but not necessarily
//   assignment-minimal.
// - "search":     depth-first enumeration of assignments, variables ordered
//   by first occurrence in lhs·rhs, values in element order.  When the
//   monoid has a zero, subtrees where both sides have already collapsed to
//   zero are skipped (every extension yields 0 = 0).  The witness is the
//   first counterexample in lexicographic assignment order; the budget
//   counts explored assignment nodes and overruns raise CapError.
//
// Assignment order (for witness minimality) is defined over variables sorted
// by first occurrence in lhs·rhs, values by element index.

namespace nfb {

struct SatisfyOptions {
    std::uint64_t budget = 1'000'000'000; // explored assignment nodes
    unsigned workers = 1;                 // root-level fan-out of the search
};

using Assignment = std::map<Variable, Elem>;

struct Verdict {
    enum class Status { Holds, Fails };

    Status status = Status::Holds;
    std::optional<Assignment> witness; // Fails: unequal evaluations
    std::string route;                 // engine that decided
    std::string note;                  // route-specific detail

    bool holds() const { return status == Status::Holds; }
};

// Evaluate u at an assignment covering content(u).  Empty words need an
// identity element.  Throws ValidationError on missing variables.
Elem eval_word(const FiniteMonoid& m, const Word& u, const Assignment& a);

Verdict satisfies(const FiniteMonoid& m, const Identity& id, const SatisfyOptions& opts = {});

// { v : |v| <= bound, con(v) ⊆ con(u), m ⊨ u ≈ v }, a bounded window of the
// equivalence class of u.  Candidates run in shortlex order; the candidate
// count is capped (CapError past 10^7).  Always contains u when |u| <= bound.
std::set<Word> equivalence_class(const FiniteMonoid& m, const Word& u, std::size_t bound,
                                 const SatisfyOptions& opts = {});

// ---- isoterm checks ----

struct IsotermVerdict {
    enum class Status { Isoterm, NotIsoterm, IsotermUpToBound };

    Status status = Status::Isoterm;
    std::optional<Word> witness;      // NotIsoterm: v ≠ u with m ⊨ u ≈ v
    std::string certificate;          // Isoterm: re-checkable evidence
    std::optional<std::size_t> bound; // IsotermUpToBound: window used

    bool exact() const { return status != Status::IsotermUpToBound; }
};

// Decides exactly whether x^c is an isoterm, from the power cycles of all
// elements: x^c ≈ x^j (j ≠ c) holds iff c reaches every element's cycle
// (c >= max index), and 1 ≈ y^j holds for some j iff the monoid is a group.
// Any identity x^c ≈ v collapses onto one of those two checks by sending
// the other variables (resp. x) to 1.  Pre: c >= 1, identity present.
IsotermVerdict power_isoterm(const FiniteMonoid& m, std::size_t c);

// Exact mode applies when the single letter and x^(max occ of u) are both
// isoterms by power_isoterm: every equivalent word is then a permutation of
// u's letters, and those are enumerated exhaustively.  Otherwise the verdict
// is bounded, from the class window at `bound` (default |u| + 2).
IsotermVerdict is_isoterm(const FiniteMonoid& m, const Word& u,
                          std::optional<std::size_t> bound = {},
                          const SatisfyOptions& opts = {});

// ---- stability with respect to a monoid ----

struct CheckReport {
    enum class Status { Pass, BoundedPass, Fail };

    Status status = Status::Pass;
    std::size_t bound = 0;              // class-window bound used (0 = exact)
    std::optional<Word> witness;        // Fail: violating class member
    std::string detail;

    bool passed() const { return status != Status::Fail; }
};

// X (occurrences of u) is l-stable in u wrt m iff X is stable under
// l_map(u, v) for every v in the class of u.  Checked over the bounded
// window (default |u| + 2); a clean sweep reports BoundedPass.
CheckReport l_stable_wrt(const FiniteMonoid& m, const Word& u, const std::vector<OccRef>& X,
                         std::optional<std::size_t> bound = {}, const SatisfyOptions& opts = {});

// occ_u(x) == occ_v(x) for every class member v (bounded window).
CheckReport var_stable_wrt(const FiniteMonoid& m, const Word& u, const Variable& x,
                           std::optional<std::size_t> bound = {},
                           const SatisfyOptions& opts = {});

// equal projections u(X) == v(X) for every class member v (bounded window).
CheckReport varset_stable_wrt(const FiniteMonoid& m, const Word& u, const std::set<Variable>& X,
                              std::optional<std::size_t> bound = {},
                              const SatisfyOptions& opts = {});

// ---- class-shape checks ----

struct ShapeTemplate {
    enum class Kind {
        PowerPair,     // v = x^i y^j, i > 1, j > 1
        PowerSandwich, // v = x^i y^j x^k, i > 0, k > 0, j > 1
        ExactAtOcc,    // occ_v(x) == occ_u(x) forces v == u
    };

    Kind kind = Kind::PowerPair;
    Variable x;
    Variable y; // unused for ExactAtOcc
};

bool matches_shape(const Word& v, const ShapeTemplate& tmpl, const Word& u);

// Every member of the bounded class window matches the template.
CheckReport class_shape(const FiniteMonoid& m, const Word& u, const ShapeTemplate& tmpl,
                        std::optional<std::size_t> bound = {}, const SatisfyOptions& opts = {});

} // namespace nfb
