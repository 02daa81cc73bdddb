#pragma once

#include <string>

#include "json.hpp"

#include "nfb/monoids.hpp"

// JSON persistence for finite monoids.  Layout:
//   {
//     "name": "L1", "order": 7,
//     "identity": 0 | null, "zero": 5 | null,
//     "names": ["1", "a", ...],
//     "table": [[...], ...],            row-major, one array per row
//     "generators": {"a": 1, ...},      optional
//     "grades": [0, 1, null, ...],      optional; null marks the zero
//     "jm_theory_level": 2              optional
//   }
// Direct-product structure is not persisted: products are saved flat.
// Loading runs full validation, so a corrupted table never gets through.

namespace nfb {

nlohmann::ordered_json to_json(const FiniteMonoid& M);
FiniteMonoid monoid_from_json(const nlohmann::json& j);

void save_monoid(const FiniteMonoid& M, const std::string& path);
FiniteMonoid load_monoid(const std::string& path);

} // namespace nfb
