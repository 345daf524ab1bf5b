#include "csp/error.hpp"
#include "csp/model.hpp"

namespace csp {

namespace {

KForm two_form(int dim, std::initializer_list<std::pair<MultiIndex, Rational>> terms) {
  KForm f(dim, 2);
  for (const auto& [idx, c] : terms) f.add_term(idx, c);
  return f;
}

// 5-dimensional nilpotent group with d a2 = a1^a3, d a4 = a1^a5; the pair
// (a2, a4^a5) has type (1,1).
Model make_g5() {
  Model m;
  const int N = 5;
  m.algebra = LieAlgebra::from_structure_equations(
      N, {{2, two_form(N, {{{1, 3}, Rational(1)}})}, {4, two_form(N, {{{1, 5}, Rational(1)}})}});
  m.eta = KForm::basis_covector(N, 2);
  m.omega = two_form(N, {{{4, 5}, Rational(1)}});
  m.metric = MetricTensor::diagonal({half(), Rational(1), half(), half(), half()});
  m.name = "g5";
  return m;
}

// 7-dimensional analogue: d a_{j-1} = a1^aj for j = 3, 4, 5, 7; the pair
// (a2, a4^a5 + a6^a7) has type (1,2).
Model make_g7() {
  Model m;
  const int N = 7;
  m.algebra = LieAlgebra::from_structure_equations(
      N, {{2, two_form(N, {{{1, 3}, Rational(1)}})},
          {3, two_form(N, {{{1, 4}, Rational(1)}})},
          {4, two_form(N, {{{1, 5}, Rational(1)}})},
          {6, two_form(N, {{{1, 7}, Rational(1)}})}});
  m.eta = KForm::basis_covector(N, 2);
  m.omega = two_form(N, {{{4, 5}, Rational(1)}, {{6, 7}, Rational(1)}});
  m.metric =
      MetricTensor::diagonal({half(), Rational(1), half(), half(), half(), half(), half()});
  m.name = "g7";
  return m;
}

// Heisenberg contact metric factor times flat R^2 with its area form.
Model make_product() {
  Model m;
  const int N = 5;
  m.algebra =
      LieAlgebra::from_structure_equations(N, {{3, two_form(N, {{{1, 2}, Rational(1)}})}});
  m.eta = KForm::basis_covector(N, 3);
  m.omega = two_form(N, {{{4, 5}, Rational(1)}});
  m.metric = MetricTensor::diagonal({half(), half(), Rational(1), half(), half()});
  m.name = "product";
  return m;
}

} // namespace

Model builtin_example(const std::string& name) {
  if (name == "g5") return make_g5();
  if (name == "g7") return make_g7();
  if (name == "product") return make_product();
  throw Error(ErrorKind::UnknownExample, "unknown example '" + name + "' (expected g5, g7 or product)");
}

} // namespace csp
