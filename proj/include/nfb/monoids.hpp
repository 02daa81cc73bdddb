#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nfb/error.hpp"
#include "nfb/words.hpp"

// Finite monoids and semigroups as materialized Cayley tables, plus the
// constructions used throughout: factor-word monoids of finite word sets,
// finitely presented quotients via terminating rewrite rules, Boolean
// relation/matrix monoids, identity adjunction and direct products.
//
// Design decisions:
// - elements are dense 0-based indices into an order x order table; an
//   identity element is optional so plain semigroups fit the same type
// - every construction validates itself (closure, neutrality, absorption,
//   associativity - exhaustive up to order 512, sampled above)
// - factor-word monoids carry a length grading used by the search engines;
//   relation/matrix monoids carry the depth tag of their subword theory
// - direct products keep handles to their factors so decision procedures
//   can work factor-wise

namespace nfb {

using Elem = std::uint16_t;

// Largest materializable order (table memory is order^2 entries).
inline constexpr std::size_t kMaxOrder = 8192;

// Grade sentinel for an absorbing zero in a graded monoid.
inline constexpr std::uint32_t kGradeZero = 0xffffffffu;

struct FiniteMonoid {
    std::string name;
    std::size_t order = 0;
    std::vector<Elem> table; // row-major: table[a * order + b] = a * b
    std::optional<Elem> identity;
    std::optional<Elem> zero;
    std::vector<std::string> names;
    std::map<std::string, Elem> generators; // alphabet letter -> element

    // Non-empty iff the monoid is graded: products add grades unless they
    // hit the zero element (which carries kGradeZero).
    std::vector<std::uint32_t> grades;

    // Set iff the equational theory is scattered-subword equivalence at
    // this depth (used as a decision fast path, always cross-checkable).
    std::optional<std::size_t> jm_theory_level;

    // Both set iff this monoid was built as a direct product.
    std::vector<std::shared_ptr<const FiniteMonoid>> factors;

    Elem mul(Elem a, Elem b) const { return table[a * order + b]; }
    bool is_monoid() const { return identity.has_value(); }
    const std::string& elem_name(Elem e) const { return names[e]; }

    // Product of a sequence of elements; empty sequences need an identity.
    Elem eval(const std::vector<Elem>& seq) const;
};

// Checks structural sanity: table shape and closure, named identity/zero
// behave as claimed, grading is additive, associativity (exhaustive for
// order <= 512, else one million seeded random triples plus all generator
// triples).  Throws ValidationError.
void validate(const FiniteMonoid& M);

// Table-only copy: drops factors, grading and theory tags (not generators).
FiniteMonoid flattened(const FiniteMonoid& M);

// ---- constructions ----

// Factor-word monoid of a finite set of words: elements are the identity,
// the distinct non-empty factors (contiguous blocks) of words in W, and a
// zero; the product of two factors is their concatenation when that is
// again a factor, else zero.  Index 0 is the identity, the last index is
// zero, factors are sorted shortlex.  Pre: W non-empty, all words non-empty.
FiniteMonoid dilworth(const std::vector<Word>& W);

struct RewriteRule {
    Word lhs;
    Word rhs;        // ignored when to_zero
    bool to_zero = false;

    // length-reducing, or length-preserving and lex-reducing
    bool reducing() const;
};

// "aba -> 0", "aa -> a", "ab -> 1" (0 = zero, 1 = empty word).
RewriteRule parse_rule(const std::string& text);

// Quotient of the free monoid on the letters occurring in the rules (plus
// any extra generators) by a terminating rewrite system.  Normal forms are
// computed leftmost-first with rules tried in declaration order; elements
// are the normal forms reachable from the generators, closed under
// product-then-normalize.  The identity appears iff some product rewrites
// to the empty word.  Throws CapError past element_cap.
FiniteMonoid from_rules(const std::vector<RewriteRule>& rules,
                        const std::vector<std::string>& extra_generators = {},
                        std::size_t element_cap = 10'000);

// The six-element Brandt monoid: adjoin_identity of the quotient by
// {aba -> a, bab -> b, aa -> 0, bb -> 0}.
FiniteMonoid brandt();

// All reflexive binary relations on k points (k x k Boolean matrices with
// all-ones diagonal) under relation composition.  Order 2^(k^2 - k);
// pre: 2 <= k <= 4.  Subword theory depth k - 1.
FiniteMonoid reflexive_relations(std::size_t k);

// Upper triangular k x k Boolean matrices; with unit_diagonal the diagonal
// is forced to ones (order 2^(k(k-1)/2), pre 2 <= k <= 5, subword theory
// depth k - 1: every element is I + nilpotent, so r^(k-1) = r^k throughout).
// With a free diagonal (order 2^(k(k+1)/2), pre 2 <= k <= 4) there is no
// theory tag: the superdiagonal shift N has N^(k-1) != N^k = 0, refuting
// the depth-(k-1) pair x^(k-1) = x^k.
FiniteMonoid triangular_boolean(std::size_t k, bool unit_diagonal);

// New neutral element at index 0; every old element shifts up by one.
FiniteMonoid adjoin_identity(const FiniteMonoid& M);

// Componentwise product on pairs, pair (i, j) at index i * order(B) + j.
// Identity = pair of identities (both factors must be monoids); zero is
// present iff both factors have zeros.  Pre: combined order <= kMaxOrder.
FiniteMonoid direct_product(const FiniteMonoid& A, const FiniteMonoid& B);

// ---- power structure ----

struct PowerCycle {
    std::size_t index = 1;  // least i with s^i in the cycle
    std::size_t period = 1; // least p with s^(i+p) = s^i
};

PowerCycle power_cycle(const FiniteMonoid& M, Elem s);

// Every element has power period 1.
bool is_aperiodic(const FiniteMonoid& M);

} // namespace nfb
