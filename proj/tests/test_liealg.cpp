#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csp/error.hpp"
#include "support/test_support.hpp"

using namespace csp;
using namespace csp::testing;

namespace {

KForm two_form(int dim, std::initializer_list<std::pair<MultiIndex, Rational>> terms) {
  KForm f(dim, 2);
  for (const auto& [idx, c] : terms) f.add_term(idx, c);
  return f;
}

LieAlgebra g5_algebra() { return builtin_example("g5").algebra; }
LieAlgebra g7_algebra() { return builtin_example("g7").algebra; }

} // namespace

TEST_CASE("structure equations fix the bracket sign") {
  const LieAlgebra g5 = g5_algebra();
  // d a2 = a1^a3, d a4 = a1^a5  =>  [X1,X3] = -X2, [X1,X5] = -X4
  Vector expect(5);
  expect[2] = Rational(-1);
  CHECK(g5.bracket(Vector::basis(5, 1), Vector::basis(5, 3)) == expect);
  Vector expect45(5);
  expect45[4] = Rational(-1);
  CHECK(g5.bracket(Vector::basis(5, 1), Vector::basis(5, 5)) == expect45);

  // everything else vanishes
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      if ((i == 1 && j == 3) || (i == 1 && j == 5)) continue;
      CHECK(g5.bracket(Vector::basis(5, i), Vector::basis(5, j)).is_zero());
    }

  // antisymmetry makes [X5, X1] = +X4
  Vector x4(5);
  x4[4] = Rational(1);
  CHECK(g5.bracket(Vector::basis(5, 5), Vector::basis(5, 1)) == x4);

  // bracket of a vector with itself
  SplitMix64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const Vector v = random_vector(rng, 5);
    CHECK(g5.bracket(v, v).is_zero());
  }
}

TEST_CASE("g7 brackets") {
  const LieAlgebra g7 = g7_algebra();
  Vector expect(7);
  expect[3] = Rational(-1); // [X1, X4] = -X3
  CHECK(g7.bracket(Vector::basis(7, 1), Vector::basis(7, 4)) == expect);
}

TEST_CASE("all-closed equations give the abelian algebra") {
  const LieAlgebra L = LieAlgebra::from_structure_equations(4, {});
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) CHECK(L.structure_constant(k, i, j).is_zero());
  CHECK(L == LieAlgebra::abelian(4));
}

TEST_CASE("minimal Heisenberg relabeling") {
  const LieAlgebra L = LieAlgebra::from_structure_equations(
      3, {{2, two_form(3, {{{1, 3}, Rational(1)}})}});
  Vector expect(3);
  expect[2] = Rational(-1);
  CHECK(L.bracket(Vector::basis(3, 1), Vector::basis(3, 3)) == expect);
}

TEST_CASE("differential reproduces the structure equations") {
  const LieAlgebra g5 = g5_algebra();
  CHECK(g5.cee_d(KForm::basis_covector(5, 2)) == two_form(5, {{{1, 3}, Rational(1)}}));
  CHECK(g5.cee_d(KForm::basis_covector(5, 4)) == two_form(5, {{{1, 5}, Rational(1)}}));
  CHECK(g5.cee_d(KForm::basis_covector(5, 1)).is_zero());

  const auto eqns = g5.structure_equations();
  CHECK(eqns.size() == 2);
  CHECK(eqns.at(2) == two_form(5, {{{1, 3}, Rational(1)}}));
}

TEST_CASE("omega of g5 is closed through the antiderivation") {
  const LieAlgebra g5 = g5_algebra();
  const KForm omega = two_form(5, {{{4, 5}, Rational(1)}});
  // d(a4^a5) = (a1^a5)^a5 = 0
  CHECK(g5.cee_d(omega).is_zero());
  // (d eta)^2 = 0 confirms m = 1
  CHECK(power(g5.cee_d(KForm::basis_covector(5, 2)), 2).is_zero());
}

TEST_CASE("d of degree-0 forms vanishes") {
  const LieAlgebra g5 = g5_algebra();
  CHECK(g5.cee_d(KForm::constant(5, Rational(7))).is_zero());
}

TEST_CASE("d squared vanishes on valid algebras, 500 cases") {
  SplitMix64 rng(72);
  int done = 0;
  while (done < 500) {
    const LieAlgebra L = random_valid_algebra(rng);
    const int degree = 1 + static_cast<int>(rng.below(2));
    const KForm a = random_form(rng, L.dim(), degree);
    CHECK(L.cee_d(L.cee_d(a)).is_zero());
    ++done;
  }
}

TEST_CASE("Jacobi validation rejects corrupted constants through both routes") {
  // G5 constants with one corrupted entry: [X1,X3] = -X2 flips to +X2 alone
  // would stay a Lie algebra, so corrupt in a way that breaks Jacobi:
  // add [X3,X4] = X4 to g5's table.
  std::vector<std::array<int, 3>> where{{2, 1, 3}, {4, 1, 5}, {4, 3, 4}};
  std::vector<Rational> values{Rational(-1), Rational(-1), Rational(1)};
  const LieAlgebra bad = LieAlgebra::unchecked(5, where, values);
  CHECK(bad.jacobi_witness().has_value());
  CHECK(bad.d_squared_witness().has_value());

  CHECK_THROWS_WITH_AS(static_cast<void>(LieAlgebra::from_structure_constants(5, where, values)),
                       doctest::Contains("Jacobi"), Error);
  try {
    static_cast<void>(LieAlgebra::from_structure_constants(5, where, values));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Jacobi);
    const auto [i, j, k] = e.jacobi_triple;
    CHECK(i >= 1);
    CHECK(i < j);
    CHECK(j < k);
    CHECK(k <= 5);
  }
}

TEST_CASE("both Jacobi routes agree on random perturbations, 200 cases") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const LieAlgebra base = random_valid_algebra(rng);
    const int n = base.dim();
    std::vector<std::array<int, 3>> where;
    std::vector<Rational> values;
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!base.structure_constant(k, i, j).is_zero()) {
            where.push_back({k, i, j});
            values.push_back(base.structure_constant(k, i, j));
          }
    // perturb one random slot (possibly adding a fresh one)
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    where.push_back({k, i, j});
    values.push_back(random_rational(rng));
    const LieAlgebra candidate = LieAlgebra::unchecked(n, where, values);
    CHECK(candidate.jacobi_witness().has_value() == candidate.d_squared_witness().has_value());
  }
}

TEST_CASE("Lie derivative along the Reeb direction kills both forms") {
  const Model g5 = builtin_example("g5");
  const Vector xi = Vector::basis(5, 2);
  CHECK(g5.algebra.lie_derivative(xi, g5.eta).is_zero());
  CHECK(g5.algebra.lie_derivative(xi, g5.omega).is_zero());
  SplitMix64 rng(1);
  CHECK(g5.algebra.lie_derivative(random_vector(rng, 5), KForm::constant(5, Rational(1)))
            .is_zero());
}

TEST_CASE("Lie derivative is a derivation over the wedge, 500 cases") {
  SplitMix64 rng(74);
  int done = 0;
  while (done < 500) {
    const LieAlgebra L = random_valid_algebra(rng);
    const int n = L.dim();
    const int p = 1 + static_cast<int>(rng.below(2));
    const int q = 1 + static_cast<int>(rng.below(2));
    if (p + q >= n) continue;
    const KForm a = random_form(rng, n, p);
    const KForm b = random_form(rng, n, q);
    const Vector v = random_vector(rng, n);
    const KForm lhs = L.lie_derivative(v, wedge(a, b));
    const KForm rhs = wedge(L.lie_derivative(v, a), b) + wedge(a, L.lie_derivative(v, b));
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("catalog algebras satisfy Jacobi and antisymmetry") {
  for (const char* name : {"g5", "g7", "product"}) {
    const LieAlgebra L = builtin_example(name).algebra;
    CHECK_FALSE(L.jacobi_witness().has_value());
    CHECK_FALSE(L.d_squared_witness().has_value());
    for (int k = 1; k <= L.dim(); ++k)
      for (int i = 1; i <= L.dim(); ++i)
        for (int j = 1; j <= L.dim(); ++j)
          CHECK(L.structure_constant(k, i, j) == -L.structure_constant(k, j, i));
  }
}

TEST_CASE("structure equation input validation") {
  CHECK_THROWS_AS(LieAlgebra::from_structure_equations(
                      3, {{7, two_form(3, {{{1, 2}, Rational(1)}})}}),
                  Error);
  CHECK_THROWS_AS(LieAlgebra::from_structure_equations(
                      3, {{2, KForm::basis_covector(3, 1)}}),
                  Error);
  CHECK_THROWS_AS(LieAlgebra::from_structure_equations(
                      3, {{2, two_form(4, {{{1, 2}, Rational(1)}})}}),
                  Error);
}
