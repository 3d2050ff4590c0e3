#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hermsig/cones.hpp"
#include "hermsig/json_io.hpp"

namespace hermsig::verify {

struct NamedAlgebra {
  std::string name;
  AlgebraWithInvolution algebra;
};

NumberField rationals();
NumberField sqrt2_field();
NumberField fourth_root2_field();

/// The fixed list of test algebras used by the property suite.
std::vector<NamedAlgebra> catalog();
NamedAlgebra catalog_entry(const std::string& name);

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20240917;
};

CriterionResult sturm_counting(const SuiteOptions& o);
CriterionResult signature_consistency(const SuiteOptions& o);
CriterionResult congruence_invariance(const SuiteOptions& o);
CriterionResult nil_vanishing(const SuiteOptions& o);
CriterionResult max_signature(const SuiteOptions& o);
CriterionResult cone_equality(const SuiteOptions& o);
CriterionResult cone_axioms(const SuiteOptions& o);
CriterionResult same_signature(const SuiteOptions& o);
CriterionResult mideal_suite(const SuiteOptions& o);
CriterionResult z_witness_completeness(const SuiteOptions& o);
CriterionResult lambda_constancy(const SuiteOptions& o);
CriterionResult extension(const SuiteOptions& o);

using Criterion = std::function<CriterionResult(const SuiteOptions&)>;
std::vector<Criterion> criteria();
/// Runs every criterion; `on_result` sees each result as it completes.
std::vector<CriterionResult> run_all(const SuiteOptions& o,
                                     const std::function<void(const CriterionResult&)>& on_result = nullptr);

json::Json to_json(const CriterionResult& r);

// Independent oracles, kept apart from the library's Sturm machinery.

/// Root isolation by Descartes' rule of signs on Moebius-transformed
/// polynomials; point intervals for rational roots found on the way.
std::vector<Interval> descartes_isolate(const Polynomial& p);
/// Counts roots of m where every g is positive by isolating and evaluating.
std::size_t brute_force_sign_count(const Polynomial& m, const std::vector<Polynomial>& gs);

}  // namespace hermsig::verify
