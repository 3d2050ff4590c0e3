#include "hermsig/json_io.hpp"

#include "hermsig/error.hpp"

namespace hermsig::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("ParseError", what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Rational read_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rational must be a \"p/q\" string or an integer");
}

Polynomial read_polynomial(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : array(j, "polynomial")) c.push_back(read_rational(x));
  return Polynomial(std::move(c));
}

NumberField read_field(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return NumberField::rationals();
  return NumberField(read_polynomial(member(j, "min_poly")));
}

FieldElement read_field_element(const NumberField& f, const Json& j) {
  if (j.is_string() || j.is_number_integer()) return f.from_rational(read_rational(j));
  std::vector<Rational> c;
  for (const auto& x : array(j, "field element")) c.push_back(read_rational(x));
  if (static_cast<int>(c.size()) != f.degree()) fail("field element has wrong length");
  return f.element(std::move(c));
}

DElement read_d_element(const DivisionAlgebra& d, const Json& j) {
  if (j.is_string() || j.is_number_integer()) return d.scalar(read_field_element(d.field(), j));
  std::vector<FieldElement> c;
  for (const auto& x : array(j, "division-algebra element")) c.push_back(read_field_element(d.field(), x));
  if (c.size() != d.dimension()) fail("division-algebra element has wrong length");
  return d.element(std::move(c));
}

DivisionAlgebra read_division(const NumberField& f, const Json& j) {
  const Json& kj = member(j, "kind");
  if (!kj.is_string()) fail("division kind must be a string");
  const std::string kind = kj.get<std::string>();
  if (kind == "base") return DivisionAlgebra::base(f);
  if (kind == "quadratic") return DivisionAlgebra::quadratic(read_field_element(f, member(j, "d")));
  if (kind == "quaternion")
    return DivisionAlgebra::quaternion(read_field_element(f, member(j, "a")), read_field_element(f, member(j, "b")));
  fail("unknown division kind \"" + kind + "\"");
}

DMatrix read_d_matrix(const DivisionAlgebra& d, const Json& j) {
  std::vector<std::vector<DElement>> rows;
  for (const auto& row : array(j, "matrix")) {
    std::vector<DElement> r;
    for (const auto& x : array(row, "matrix row")) r.push_back(read_d_element(d, x));
    rows.push_back(std::move(r));
  }
  try {
    return DMatrix::from_rows(std::move(rows));
  } catch (const Error&) {
    fail("matrix is empty or ragged");
  }
}

AlgebraWithInvolution read_algebra(const Json& j) {
  const NumberField f = read_field(member(j, "field"));
  const DivisionAlgebra d = read_division(f, member(j, "division"));
  const Json& nj = member(j, "n");
  if (!nj.is_number_unsigned() || nj.get<std::size_t>() == 0) fail("n must be a positive integer");
  const std::size_t n = nj.get<std::size_t>();
  DMatrix phi = DMatrix::identity(n, d.zero(), d.one());
  if (j.contains("phi")) phi = read_d_matrix(d, j.at("phi"));
  return make_algebra(d, n, phi);
}

AlgebraElement read_algebra_element(const AlgebraWithInvolution& a, const Json& j) {
  AlgebraElement x = read_d_matrix(a.division(), j);
  if (x.rows() != a.n() || x.cols() != a.n()) fail("algebra element has wrong shape");
  return x;
}

HermitianForm read_hermitian_form(const AlgebraWithInvolution& a, const Json& j) {
  if (j.is_object() && j.contains("diag")) {
    std::vector<AlgebraElement> entries;
    for (const auto& x : array(j.at("diag"), "diag")) entries.push_back(read_algebra_element(a, x));
    if (entries.empty()) fail("empty form");
    return HermitianForm::diagonal(a, entries);
  }
  std::vector<std::vector<AlgebraElement>> rows;
  for (const auto& row : array(member(j, "gram"), "gram")) {
    std::vector<AlgebraElement> r;
    for (const auto& x : array(row, "gram row")) r.push_back(read_algebra_element(a, x));
    rows.push_back(std::move(r));
  }
  try {
    return HermitianForm(a, FormMatrix::from_rows(std::move(rows)));
  } catch (const Error& e) {
    if (e.code() == "ShapeMismatch") fail("gram is empty or ragged");
    throw;
  }
}

QuadraticForm read_quadratic_form(const NumberField& f, const Json& j) {
  if (j.is_object() && j.contains("diag")) {
    std::vector<FieldElement> d;
    for (const auto& x : array(j.at("diag"), "diag")) d.push_back(read_field_element(f, x));
    return QuadraticForm(f, std::move(d));
  }
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& row : array(member(j, "gram"), "gram")) {
    std::vector<FieldElement> r;
    for (const auto& x : array(row, "gram row")) r.push_back(read_field_element(f, x));
    rows.push_back(std::move(r));
  }
  try {
    return QuadraticForm::from_gram(FieldMatrix::from_rows(std::move(rows)));
  } catch (const Error& e) {
    if (e.code() == "ShapeMismatch") fail("gram is empty or ragged");
    throw;
  }
}

Json write(const Rational& r) { return to_string(r); }

Json write(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(write(c));
  return out;
}

Json write(const Interval& iv) { return Json::array({write(iv.lo), write(iv.hi)}); }

Json write(const NumberField& f) { return Json{{"min_poly", write(f.min_poly())}}; }

Json write(const FieldElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(write(c));
  return out;
}

Json write(const DElement& x) {
  Json out = Json::array();
  for (const auto& c : x.components()) out.push_back(write(c));
  return out;
}

Json write(const DMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json write(const QuadraticForm& q) {
  Json d = Json::array();
  for (const auto& x : q.diagonal()) d.push_back(write(x));
  return Json{{"diag", std::move(d)}};
}

Json write_division(const DivisionAlgebra& d) {
  switch (d.kind()) {
    case DivisionKind::base:
      return Json{{"kind", "base"}};
    case DivisionKind::quadratic:
      return Json{{"kind", "quadratic"}, {"d", write(d.d())}};
    case DivisionKind::quaternion:
      return Json{{"kind", "quaternion"}, {"a", write(d.a())}, {"b", write(d.b())}};
  }
  return {};
}

Json write_algebra(const AlgebraWithInvolution& a) {
  return Json{{"field", write(a.field())},
              {"division", write_division(a.division())},
              {"n", a.n()},
              {"phi", write(a.phi())}};
}

Json write_form(const HermitianForm& h) {
  Json g = Json::array();
  for (std::size_t i = 0; i < h.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < h.dimension(); ++j) row.push_back(write(h.gram()(i, j)));
    g.push_back(std::move(row));
  }
  return Json{{"gram", std::move(g)}};
}

Json write(const OrderingHandle& p) {
  return Json{{"ordering_index", p.root_index()}, {"isolating", write(p.isolating())}};
}

Json write(const ConeWitness& w) {
  Json d = Json::array();
  for (const auto& x : w.diagonal) d.push_back(write(x));
  return Json{{"transform", write(w.transform)}, {"diagonal", std::move(d)}};
}

Json write(const IsometryEvidence& e) {
  return Json{{"kind", "EVIDENCE"},
              {"lhs_rank", e.lhs_rank},
              {"rhs_rank", e.rhs_rank},
              {"lhs_signatures", e.lhs_signatures},
              {"rhs_signatures", e.rhs_signatures},
              {"holds", e.holds()}};
}

Json write(const ZWitness& w) {
  Json a = Json::array();
  for (const auto& x : w.a_list) a.push_back(write(x));
  Json b = Json::array();
  for (const auto& x : w.b_list) b.push_back(write(x));
  return Json{{"q", write(w.q)}, {"a_list", std::move(a)}, {"b_list", std::move(b)}, {"evidence", write(w.evidence)}};
}

Json write(const AxiomCheck& c) {
  return Json{{"passed", c.passed}, {"tests", c.tests}, {"violations", c.violations}};
}

Json write(const ConeAxiomReport& r) {
  return Json{{"P1", write(r.p1)}, {"P2", write(r.p2)}, {"P3", write(r.p3)},
              {"P4", write(r.p4)}, {"P5", write(r.p5)}, {"passed", r.passed()}};
}

Json write(const MIdealReport& r) {
  return Json{{"sum_closed", write(r.sum_closed)},   {"scalar_closed", write(r.scalar_closed)},
              {"ideal_product", write(r.ideal_product)}, {"proper", write(r.proper)},
              {"prime", write(r.prime)},             {"torsion_free", write(r.torsion_free)},
              {"passed", r.passed()}};
}

}  // namespace hermsig::json
