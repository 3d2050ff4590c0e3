#pragma once

#include <nlohmann/json.hpp>

#include "hermsig/witt_ideal.hpp"

namespace hermsig::json {

using Json = nlohmann::ordered_json;

// Readers throw Error("ParseError") on malformed input.

Rational read_rational(const Json& j);
Polynomial read_polynomial(const Json& j);
NumberField read_field(const Json& j);
/// An array of coordinates, or a single "p/q" string for a rational.
FieldElement read_field_element(const NumberField& f, const Json& j);
DElement read_d_element(const DivisionAlgebra& d, const Json& j);
DivisionAlgebra read_division(const NumberField& f, const Json& j);
/// {"field", "division", "n", "phi"}; phi defaults to the identity.
AlgebraWithInvolution read_algebra(const Json& j);
AlgebraElement read_algebra_element(const AlgebraWithInvolution& a, const Json& j);
/// {"gram": [[x, ...], ...]} or {"diag": [x, ...]}.
HermitianForm read_hermitian_form(const AlgebraWithInvolution& a, const Json& j);
QuadraticForm read_quadratic_form(const NumberField& f, const Json& j);
/// DMatrix as a nested array of D-elements.
DMatrix read_d_matrix(const DivisionAlgebra& d, const Json& j);

Json write(const Rational& r);
Json write(const Polynomial& p);
Json write(const Interval& iv);
Json write(const NumberField& f);
Json write(const FieldElement& x);
Json write(const DElement& x);
Json write(const DMatrix& m);
Json write(const QuadraticForm& q);
Json write_division(const DivisionAlgebra& d);
Json write_algebra(const AlgebraWithInvolution& a);
Json write_form(const HermitianForm& h);
Json write(const OrderingHandle& p);
Json write(const ConeWitness& w);
Json write(const IsometryEvidence& e);
Json write(const ZWitness& w);
Json write(const AxiomCheck& c);
Json write(const ConeAxiomReport& r);
Json write(const MIdealReport& r);

}  // namespace hermsig::json
