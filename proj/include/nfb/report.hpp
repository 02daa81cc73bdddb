#pragma once

#include "json.hpp"

#include "nfb/conditions.hpp"
#include "nfb/decide.hpp"
#include "nfb/monoids.hpp"

// JSON projections for verdicts and reports.  Shapes are fixed and field
// order is insertion order (ordered_json), so identical inputs serialize to
// byte-identical text.  Witness assignments carry both the element index
// and its display name; witness words and identities are rendered in the
// same text format parse_word / parse_identity accept, so every witness can
// be re-verified by an independent run.

namespace nfb {

// {"var": ..., "element": ..., "name": ...} per entry, sorted by variable.
nlohmann::ordered_json assignment_json(const Assignment& a, const FiniteMonoid& M);

nlohmann::ordered_json verdict_json(const Verdict& v, const FiniteMonoid& M);
nlohmann::ordered_json isoterm_json(const IsotermVerdict& v);
nlohmann::ordered_json check_json(const CheckReport& r);
nlohmann::ordered_json condition_json(const ConditionReport& rep, const FiniteMonoid& M);

} // namespace nfb
