#ifndef CODIFF_JSON_IO_HPP
#define CODIFF_JSON_IO_HPP

#include <json.hpp>

#include "codiff/cohomology.hpp"
#include "codiff/deformations.hpp"
#include "codiff/extensions.hpp"
#include "codiff/group_actions.hpp"

namespace codiff {

using nlohmann::json;

// Rational <-> {"num": "...", "den": "..."} (decimal strings).
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// Polynomial <-> {"vars": [names], "terms": [{"exps": [ints], "coeff": Rational}]}.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// GradedSpace <-> {"even": p, "odd": q}; Word <-> [ints].
json to_json(const GradedSpace& s);
GradedSpace space_from_json(const json& j);

// Coderivation <-> {"space": {...}, "terms": [{"word": [..], "target": i, "coeff": ...}]}.
json to_json(const Coderivation<Rational>& d);
json to_json(const Coderivation<Polynomial>& d);
Coderivation<Rational> coderivation_from_json(const json& j);
Coderivation<Polynomial> poly_coderivation_from_json(const json& j);

// {"h": [{"even", "odd"}, ...], "z": [...], "b": [...]}.
json to_json(const CohomologyReport& r);

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

// Witness: {"matrix": [[Rational]]}.
json to_json(const LinearAutomorphism& g);
LinearAutomorphism automorphism_from_json(const json& j, const GradedSpace& s);

// Component coderivations plus {"M": [indices], "W": [indices]}.
json to_json(const ExtensionDatum& e);
ExtensionDatum extension_from_json(const json& j);

// {"base", "parameters", "current", "order", "relations"}.
json to_json(const DeformationState& s);

}  // namespace codiff

#endif
