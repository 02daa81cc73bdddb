#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfb/error.hpp"
#include "nfb/words.hpp"

// Generators for the parametric identity families and their companion word
// sets.  Everything here is a pure function from (scheme name, parameters)
// to fully expanded words: block notation, interleavings, power exponents
// and linear-letter decorations are all eliminated in the output.
//
// Conventions:
// - inserted linear letters are named t1, t2, ... left to right; a scheme
//   that decorates twice (row3) draws both from one counter, so names never
//   collide across the two decorated blocks
// - a repeated plain "t" in a source word family means distinct linear
//   variables; expansions number them (x t x y t y -> x t1 x y t2 y)
// - generate() rejects missing, out-of-range, and unused parameters

namespace nfb {

enum class SchemeName {
    Row1, Row2, Row3, Row4, Row5, Row6, Row7, Row8,
    Sl1, Trahtman, JacksonAlt, Psc, El, ElE1, ElE2,
    Bsnew, Bsnew1, BlanchetSadri, Zimin,
};

SchemeName parse_scheme_name(const std::string& text); // "row3", "bsnew", ...
std::string to_string(SchemeName name);
std::vector<std::string> scheme_names();

struct SchemeParams {
    std::optional<std::size_t> n; // block width
    std::optional<std::size_t> m; // power parameter (row8, bsnew, bsnew1, blanchet_sadri)
    std::optional<std::size_t> k; // exponent (el family) / depth (zimin)
    std::optional<std::size_t> d; // single split for the row8/bsnew1 word families
};

enum class VarRole { XLike, YIndexed, ZIndexed, PIndexed, QIndexed, RIndexed, LinearT };

struct SchemeOutput {
    Identity identity;
    std::map<Variable, VarRole> roles;
};

// ---- building blocks ----

// ascending(x, 3) = x1 x2 x3; descending: x3 x2 x1; interleave(z, y, 2) =
// z1 y1 z2 y2.  Pre: n >= 1.
Word block_ascending(const std::string& base, std::size_t n);
Word block_descending(const std::string& base, std::size_t n);
Word block_interleave(const std::string& first, const std::string& second, std::size_t n);

// Insert a fresh linear letter after (or before) each position of u.
// Names are t<counter>, counter incremented per insertion, skipping any
// name already occurring in u.  |result| = 2|u|.
Word decorate(const Word& u, bool after, std::size_t& counter);
Word decorate(const Word& u, bool after); // counter starts at 1

// Z_1 = x1, Z_{k+1} = Z_k x_{k+1} Z_k.  |zimin(k)| = 2^k - 1.  Pre: k >= 1.
Word zimin(std::size_t k);

// ---- scheme expansion ----

// The two-sided identity for the scheme at the given parameters.  Throws
// ValidationError for missing/extra/out-of-range parameters and for Zimin
// (a word family, not an identity family).
SchemeOutput generate(SchemeName name, const SchemeParams& params);

// The scheme's companion word set (isoterm hypotheses), fully expanded.
// Defined for row1..row8, psc, bsnew, bsnew1, zimin; the other schemes
// have no designated word set and throw.  For row8/bsnew1, params.d picks
// a single split out of the 0 < d < m (resp. m+1) family.
std::vector<Word> isoterm_words(SchemeName name, const SchemeParams& params);

} // namespace nfb
