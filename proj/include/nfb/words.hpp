#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfb/error.hpp"

// Words over a variable alphabet, and the occurrence calculus on them:
// occurrence references, the canonical first-to-first ("l") and
// first/last ("e") occurrence maps, stability predicates, deletions,
// substitution images/preimages, and scattered-subword equivalence.
//
// Design decisions:
// - a Variable is one ASCII letter plus an optional decimal index ("x", "y12");
//   ordering is (letter, index) with the bare letter before all indexed ones
// - Word ordering is shortlex (length, then per-letter variable order), the
//   order used everywhere candidates or sets of words are enumerated
// - occurrence indices are 1-based ("_2 x" = second occurrence of x)

namespace nfb {

struct Variable {
    std::string name; // letter [0-9]*

    char letter() const { return name[0]; }
    // -1 when the variable has no numeric index.
    long index_number() const;

    std::strong_ordering operator<=>(const Variable& o) const;
    bool operator==(const Variable& o) const { return name == o.name; }
};

// Throws ParseError unless text matches letter[0-9]*.
Variable make_variable(const std::string& text);

class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Variable& at(std::size_t i) const { return letters_.at(i); }
    const Variable& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Variable>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(const Variable& v) { letters_.push_back(v); }
    void append(const Word& w);

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    // shortlex
    std::strong_ordering operator<=>(const Word& o) const;

  private:
    std::vector<Variable> letters_;
};

Word concat(const Word& a, const Word& b);

// Text form: whitespace-separated tokens; a token is either one variable
// ("x", "y12"), a run of single letters ("xyyx"), or either followed by ^k
// (k >= 1) repeating the preceding unit.  The whole input "1" denotes the
// empty word.  Indexed variables are not allowed inside letter runs.
Word parse_word(const std::string& text);

// Canonical rendering: letters separated by single spaces; empty word -> "1".
std::string render(const Word& w);

struct Identity {
    Word lhs;
    Word rhs;

    bool trivial() const { return lhs == rhs; }
    bool operator==(const Identity& o) const = default;
};

// "LHS = RHS", each side a parse_word form ("1" allowed for the empty side).
Identity parse_identity(const std::string& text);
std::string render(const Identity& id);

// ---- occurrence bookkeeping ----

struct WordProfile {
    std::map<Variable, std::size_t> occ;          // occurrence counts
    std::set<Variable> content;                   // con(u)
    std::set<Variable> linear;                    // occ == 1
    std::set<Variable> non_linear;                // occ >= 2
};

WordProfile profile(const Word& u);

std::size_t occ(const Word& u, const Variable& x);
std::set<Variable> content(const Word& u);

// Reference to the i-th occurrence (1-based) of a variable.
struct OccRef {
    Variable var;
    std::size_t index = 1;

    std::strong_ordering operator<=>(const OccRef& o) const = default;
    bool operator==(const OccRef& o) const = default;
};

std::string render(const OccRef& r);

// All occurrence references of u, in position order.
std::vector<OccRef> ocs(const Word& u);

// 0-based position of r in u; throws ValidationError if r is not in ocs(u).
std::size_t position_of(const Word& u, const OccRef& r);

// The occurrence reference sitting at 0-based position p of u.
OccRef occ_at(const Word& u, std::size_t p);

// ---- occurrence maps ----

// A partial injective map from occurrences of u to occurrences of v.
struct OccMap {
    enum class Kind { L, E };

    Kind kind;
    std::vector<std::pair<OccRef, OccRef>> pairs; // sorted by source

    bool defined_on(const OccRef& c) const;
    OccRef apply(const OccRef& c) const; // throws ValidationError if undefined
    std::vector<OccRef> domain() const;
};

// i-th occurrence of x in u -> i-th occurrence of x in v, for every shared
// variable x and every i <= min(occ_u(x), occ_v(x)).
// Pre: con(u) and con(v) intersect.
OccMap l_map(const Word& u, const Word& v);

// first -> first and last -> last occurrence of every variable that is
// non-linear in both u and v.  Pre: at least one such variable exists.
OccMap e_map(const Word& u, const Word& v);

// X (a subset of ocs(u)) is stable under f iff f is defined on all of X and
// the induced map preserves the position order (an order isomorphism onto
// its image).  Undefined references make the set unstable, not an error.
// Pre: X is a subset of ocs(u).
bool occ_set_stable(const OccMap& f, const std::vector<OccRef>& X, const Word& u,
                    const Word& v);

// occ_u(x) == occ_v(x)
bool var_stable(const Word& u, const Word& v, const Variable& x);

// u(X) == v(X): equal projections to a set of variables.
bool varset_stable(const Word& u, const Word& v, const std::set<Variable>& X);

// Consecutive pairs of X in position order.  Pre: X subset of ocs(u).
std::vector<std::pair<OccRef, OccRef>> adjacent_pairs(const Word& u,
                                                      const std::vector<OccRef>& X);

// ---- deletions ----

// Keep only letters in X (in order).
Word project(const Word& u, const std::set<Variable>& X);

// Delete letters in X: project to content(u) minus X.
Word erase(const Word& u, const std::set<Variable>& X);

// ---- substitutions ----

struct Substitution {
    enum class Mode { Monoid, Semigroup };

    std::map<Variable, Word> images;
    Mode mode = Mode::Monoid;
};

// Pre: every variable of u has an image; in Semigroup mode images must be
// non-empty.
Word apply_substitution(const Substitution& th, const Word& u);

// Half-open 0-based position interval in apply_substitution(th, u).
struct PositionInterval {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const PositionInterval& o) const = default;
};

// Positions occupied by the image of occurrence c of u.
PositionInterval occ_image(const Substitution& th, const Word& u, const OccRef& c);

// Occurrence references of U covering an interval, in position order.
std::vector<OccRef> occurrences_in(const Word& U, const PositionInterval& iv);

// The unique occurrence d of u whose occ_image interval contains C's
// position in apply_substitution(th, u).
OccRef occ_preimage(const Substitution& th, const Word& u, const OccRef& C);

// Variables of th's domain whose image meets Y.
std::set<Variable> var_preimage(const Substitution& th, const std::set<Variable>& Y);

// ---- scattered subwords ----

struct SubwordProfile {
    std::size_t max_len = 0;
    std::set<Word> subwords; // non-empty scattered subwords of length <= max_len

    bool operator==(const SubwordProfile& o) const = default;
};

// Pre: m >= 1; the number of distinct subwords is capped (default 10^7).
SubwordProfile scattered_subwords(const Word& u, std::size_t m,
                                  std::size_t cap = 10'000'000);

// Equal sets of scattered subwords of length <= m.
bool jm_equivalent(const Word& u, const Word& v, std::size_t m,
                   std::size_t cap = 10'000'000);

} // namespace nfb
