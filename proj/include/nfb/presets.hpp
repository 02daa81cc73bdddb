#pragma once

#include <string>
#include <vector>

#include "nfb/monoids.hpp"

// The named monoids and semigroups used throughout the test batteries and
// the condition checkers, constructed on demand (no global state).
//
// - L      = <a,b | aa=a, bb=b, aba=0>, order 6
// - A0     = <a,b | aa=a, bb=b, ab=0>, order 4
// - A2     = <a,b | aa=a, bb=0, aba=a, bab=b>, order 5
// - L1, A01, A21: the same with an identity adjoined
// - B21    = six-element Brandt monoid
// - perkins25 = factor-word monoid of {abtba, atbab, abab, aat}, order 25
// - refl2..refl4, ut3..ut5 (unit-diagonal upper triangular Boolean)

namespace nfb {

FiniteMonoid monoid_L();
FiniteMonoid monoid_L1();
FiniteMonoid monoid_A0();
FiniteMonoid monoid_A01();
FiniteMonoid monoid_A2();
FiniteMonoid monoid_A21();
FiniteMonoid perkins25();

// Lookup by preset name; throws ValidationError for unknown names.
FiniteMonoid preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace nfb
