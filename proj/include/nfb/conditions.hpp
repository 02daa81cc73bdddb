#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nfb/decide.hpp"
#include "nfb/monoids.hpp"
#include "nfb/schemes.hpp"
#include "nfb/words.hpp"

// Per-condition hypothesis verifiers.  Each checker expands the hypotheses
// of one sufficient non-finite-basability condition into an ordered list of
// sub-checks, runs every one through the decide layer, and aggregates them
// into a ConditionReport.  A fail entry always carries something that
// re-verifies independently of the checker: a refuting assignment, a
// refuting class member, or the identity the verdict is about.
//
// A pass is desk-scale evidence, not a proof: the underlying theorems
// quantify over all n (and all exponent pairs), while a report covers the
// requested n_range, the listed parameter grids, and bounded class windows.
// Every report says so in its scale_note.
//
// Sub-checks run sequentially; parallelism lives inside the decide layer
// (SatisfyOptions::workers).  Reports are deterministic: identical inputs
// produce identical reports, including witness choices.

namespace nfb {

inline const char* const kScaleNote =
    "pass verdicts cover the checked n-range, parameter grids, and bounded "
    "class windows only; they are evidence for the condition's hypotheses, "
    "not a proof of their fully quantified forms";

// One hypothesis instance.  `id` is a stable label ("i:n=2", "iii:x^2y^2").
struct HypothesisReport {
    std::string id;
    CheckReport::Status status = CheckReport::Status::Pass;
    std::optional<std::size_t> bound;              // window used, if bounded
    std::optional<Identity> identity;              // identity involved, if any
    std::optional<Word> witness_word;              // refuting word
    std::optional<Assignment> witness_assignment;  // refuting assignment
    std::string detail;

    bool passed() const { return status != CheckReport::Status::Fail; }
};

struct ConditionReport {
    std::string condition; // "sl1", "row3", "psc", "el k=2", "bsnew m=3", ...
    std::string monoid;
    std::vector<HypothesisReport> hypotheses;
    std::string scale_note = kScaleNote;

    bool all_pass() const;
    // First failing hypothesis, nullptr when all pass.
    const HypothesisReport* first_failure() const;
};

// Inclusive n-range for the scheme instances; lo >= 2 everywhere.
struct NRange {
    std::size_t lo = 2;
    std::size_t hi = 5;
};

// Limit-window scheme: (i) the scheme identities hold for each n; (ii) the
// set {first x, the t} is l-stable in x^m t x^c over the grid
// (m,c) in {(1,1),(1,2),(2,1),(2,2)}; (iii) the class of x^m y^c contains
// only two-power words, grid {(2,2),(2,3),(3,2)}; (iv) the class of
// x^m y^d x^c contains only power sandwiches, grid {(1,2,1),(1,2,2),(2,2,1)}.
ConditionReport check_sl1(const FiniteMonoid& M, NRange ns = {2, 5}, std::size_t bound = 8,
                          const SatisfyOptions& opts = {});

// Designated-word-set scheme for one table row (1..8): (a) every word in
// the row's companion set is an isoterm (exact where the power certificate
// applies, else over the window); (b) the row's identities hold for each n.
// `params` carries the row-specific extras (m for row 8) and is merged with
// n per instance; bound = {} means the per-word default window |u| + 2.
ConditionReport check_table_row(const FiniteMonoid& M, int row, const SchemeParams& params = {},
                                NRange ns = {2, 3}, std::optional<std::size_t> bound = {},
                                const SatisfyOptions& opts = {});

// Pair-swap scheme: (i) the scheme identities hold for each n; (ii) the
// monoid must NOT satisfy xyxy = xyyx; (iii) xytyx and xtyxy are isoterms.
ConditionReport check_psc(const FiniteMonoid& M, NRange ns = {2, 4}, std::size_t bound = 7,
                          const SatisfyOptions& opts = {});

// Exponent-k ladder scheme (works on plain semigroup tables, no identity
// element needed): (i) the scheme identities hold for each n; (ii) the
// companion identity x^k y^k x^k = x^k (y^k x^k)^{k+1} must FAIL; (iii) all
// three short companions x^{k+2} = x^2, x^{k+1}yx = xyx, xyx^{k+1} = xyx
// must hold.  Pre: k >= 2.
ConditionReport check_el(const FiniteMonoid& M, std::size_t k, NRange ns = {2, 5},
                         const SatisfyOptions& opts = {});

// Power-block scheme at m >= 3: (i) the scheme identities hold for each n
// (monoids carrying a subword-theory tag get the oracle, cross-checked by
// exhaustive search at the largest n whose search fits the cap); (ii) xyyx
// and x^{m-1} are isoterms; (iii) x^{m-2} t1 x t2 x is an isoterm; (iv) any
// class member of x^{m-2} y x y x with the same x-count is the word itself.
ConditionReport check_bsnew(const FiniteMonoid& M, std::size_t m, NRange ns = {2, 5},
                            std::optional<std::size_t> bound = {},
                            const SatisfyOptions& opts = {});

// Squared-block scheme at m >= 1: (i) the scheme identities hold for each
// n; (ii) x keeps its occurrence count across the class of x^{m+1-d} t x^d
// for each 0 < d < m+1; (iii) the class of x^p y^c contains only two-power
// words, grid {(2,2),(2,3),(3,2)}.
ConditionReport check_bsnew1(const FiniteMonoid& M, std::size_t m, NRange ns = {2, 4},
                             std::optional<std::size_t> bound = {},
                             const SatisfyOptions& opts = {});

// Purely syntactic test of the two word-set hypotheses behind the
// product-with-squared-blocks corollary: (a) in every word of W, adjacent
// occurrences of distinct non-linear variables pair a first occurrence with
// a last occurrence; (b) for each 0 < d < m+1 some word of W contains a
// factor b^{m+1-d} T b^d with T nonempty and b-free.  The detail names the
// hypothesis that failed; (a)-failures carry the offending word.
CheckReport check_corollary_alg(const std::vector<Word>& W, std::size_t m);

} // namespace nfb
