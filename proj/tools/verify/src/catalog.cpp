#include "hermsig/error.hpp"
#include "hermsig_verify/verify.hpp"

namespace hermsig::verify {

NumberField rationals() {
  static const NumberField f = NumberField::rationals();
  return f;
}

NumberField sqrt2_field() {
  static const NumberField f(Polynomial{-2, 0, 1});
  return f;
}

NumberField fourth_root2_field() {
  static const NumberField f(Polynomial{-2, 0, 0, 0, 1});
  return f;
}

namespace {

FieldElement q(const NumberField& f, long v) { return f.from_rational(Rational(v)); }

AlgebraElement diag(const DivisionAlgebra& d, std::initializer_list<DElement> entries) {
  AlgebraElement x(entries.size(), entries.size(), d.zero());
  std::size_t i = 0;
  for (const auto& e : entries) {
    x(i, i) = e;
    ++i;
  }
  return x;
}

NamedAlgebra build(const std::string& name) {
  const NumberField qq = rationals();
  const NumberField r2 = sqrt2_field();
  const FieldElement s2 = r2.generator();
  if (name == "base_Q_M2") {
    const auto d = DivisionAlgebra::base(qq);
    return {name, make_algebra(d, 2, diag(d, {d.one(), d.one()}))};
  }
  if (name == "base_Q_M2_phi") {
    const auto d = DivisionAlgebra::base(qq);
    return {name, make_algebra(d, 2, diag(d, {d.one(), -d.one()}))};
  }
  if (name == "quat_Q_11") {
    const auto d = DivisionAlgebra::quaternion(q(qq, -1), q(qq, -1));
    return {name, make_algebra(d, 1, diag(d, {d.one()}))};
  }
  if (name == "quat_Q_M2") {
    const auto d = DivisionAlgebra::quaternion(q(qq, -1), q(qq, -1));
    return {name, make_algebra(d, 2, diag(d, {d.one(), d.one()}))};
  }
  if (name == "gauss_Q") {
    const auto d = DivisionAlgebra::quadratic(q(qq, -1));
    return {name, make_algebra(d, 1, diag(d, {d.one()}))};
  }
  if (name == "quad_sqrt2_M2") {
    const auto d = DivisionAlgebra::quadratic(q(r2, -1));
    const DElement root = d.basis_element(1);
    AlgebraElement phi(2, 2, d.zero());
    phi(0, 0) = d.one();
    phi(0, 1) = root;
    phi(1, 0) = -root;
    phi(1, 1) = d.scalar(q(r2, 2));
    return {name, make_algebra(d, 2, phi)};
  }
  if (name == "quad_sqrt2_nil") {
    const auto d = DivisionAlgebra::quadratic(s2);
    return {name, make_algebra(d, 1, diag(d, {d.one()}))};
  }
  if (name == "quat_sqrt2_nil") {
    const auto d = DivisionAlgebra::quaternion(q(r2, -1), s2);
    return {name, make_algebra(d, 1, diag(d, {d.one()}))};
  }
  if (name == "base_sqrt2_phi") {
    const auto d = DivisionAlgebra::base(r2);
    return {name, make_algebra(d, 2, diag(d, {d.one(), d.scalar(s2)}))};
  }
  if (name == "quat_split") {
    const auto d = DivisionAlgebra::quaternion(q(qq, 1), q(qq, 1));
    return {name, make_algebra(d, 1, diag(d, {d.one()}))};
  }
  throw Error("UnknownAlgebra", name);
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"base_Q_M2",     "base_Q_M2_phi",  "quat_Q_11",      "quat_Q_M2",
                                             "gauss_Q",       "quad_sqrt2_M2",  "quad_sqrt2_nil", "quat_sqrt2_nil",
                                             "base_sqrt2_phi", "quat_split"};
  return n;
}

}  // namespace

NamedAlgebra catalog_entry(const std::string& name) { return build(name); }

std::vector<NamedAlgebra> catalog() {
  std::vector<NamedAlgebra> out;
  for (const auto& n : names()) out.push_back(build(n));
  return out;
}

}  // namespace hermsig::verify
