#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "symkdv/lie.hpp"

using namespace symkdv;

TEST_SUITE_BEGIN("lie");

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) * Rational(-3, 4) == Rational(-1, 2));
  CHECK(-Rational(1, 6) == Rational(-1, 6));
  CHECK(Rational(-7, 6).value() == -7.0 / 6.0);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("structure-constant table is exact") {
  const StructureConstants& sc = structure_constants();
  CHECK(sc.c(1, 2, 2) == Rational(-1, 3));
  CHECK(sc.c(2, 1, 2) == Rational(1, 3));
  CHECK(sc.c(1, 3, 3) == Rational(-7, 6));
  CHECK(sc.c(3, 1, 3) == Rational(7, 6));
  // Every other entry vanishes.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const bool named = (i == 1 && j == 2 && k == 2) || (i == 2 && j == 1 && k == 2) ||
                           (i == 1 && j == 3 && k == 3) || (i == 3 && j == 1 && k == 3);
        if (!named) CHECK(sc.c(i, j, k).is_zero());
      }
  CHECK(sc.antisymmetric());
  CHECK(sc.jacobi_identity_exact());
  CHECK_THROWS_AS(sc.c(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sc.c(1, 4, 1), std::invalid_argument);
}

TEST_CASE("commutator on basis elements") {
  const AlgebraElement x1(1, 0, 0), x2(0, 1, 0), x3(0, 0, 1);
  CHECK(commutator(x1, x2) == AlgebraElement(0, -1.0 / 3.0, 0));
  CHECK(commutator(x2, x1) == AlgebraElement(0, 1.0 / 3.0, 0));
  CHECK(commutator(x1, x3) == AlgebraElement(0, 0, -7.0 / 6.0));
  CHECK(commutator(x3, x1) == AlgebraElement(0, 0, 7.0 / 6.0));
  CHECK(commutator(x2, x3) == AlgebraElement(0, 0, 0));
  CHECK(commutator(x1, x1) == AlgebraElement(0, 0, 0));
}

TEST_CASE("commutator is bilinear") {
  const AlgebraElement a(2.0, -1.0, 0.5), b(0.0, 3.0, -4.0);
  const AlgebraElement lhs = commutator(a, b);
  AlgebraElement rhs = AlgebraElement::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      AlgebraElement ei = AlgebraElement::Zero(), ej = AlgebraElement::Zero();
      ei(i) = 1.0;
      ej(j) = 1.0;
      rhs += a(i) * b(j) * commutator(ei, ej);
    }
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((commutator(a, b) + commutator(b, a)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("adjoint closed forms") {
  // eps = 3 keeps eps/3 and 7 eps/6 exact in binary, so == is meaningful.
  const AdjointMatrix m1 = adjoint_closed_form(1, 3.0);
  CHECK(m1.entries(0, 0) == 1.0);
  CHECK(m1.entries(1, 1) == std::exp(1.0));
  CHECK(m1.entries(2, 2) == std::exp(3.5));
  CHECK(m1.entries(0, 1) == 0.0);
  CHECK(m1.entries(1, 0) == 0.0);

  const AdjointMatrix m2 = adjoint_closed_form(2, 3.0);
  CHECK(m2.entries(1, 0) == -1.0);
  CHECK(m2.entries(0, 0) == 1.0);
  CHECK(m2.entries(1, 1) == 1.0);
  CHECK(m2.entries(2, 2) == 1.0);

  const AdjointMatrix m3 = adjoint_closed_form(3, 3.0);
  CHECK(m3.entries(2, 0) == -3.5);
  CHECK(m3.entries(2, 2) == 1.0);

  // eps = 0 is the identity for every generator.
  for (int i = 1; i <= 3; ++i)
    CHECK((adjoint_closed_form(i, 0.0).entries - Eigen::Matrix3d::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);

  CHECK_THROWS_AS(adjoint_closed_form(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(adjoint_closed_form(4, 1.0), std::invalid_argument);
}

TEST_CASE("adjoint group composition") {
  // Ad(exp(a X_i)) Ad(exp(b X_i)) = Ad(exp((a+b) X_i)) up to rounding.
  for (int i = 1; i <= 3; ++i) {
    const Eigen::Matrix3d lhs =
        adjoint_closed_form(i, 0.4).entries * adjoint_closed_form(i, -1.1).entries;
    const Eigen::Matrix3d rhs = adjoint_closed_form(i, -0.7).entries;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("lie series converges to the closed form") {
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (double s : {-1.0, -0.31, 0.5, 1.0}) {
        AlgebraElement basis = AlgebraElement::Zero();
        basis(j - 1) = 1.0;
        const AlgebraElement closed = adjoint_closed_form(i, s).entries * basis;
        const AlgebraElement series = adjoint_lie_series(i, j, s, 20);
        worst = std::max(worst, (series - closed).cwiseAbs().maxCoeff());
      }
  CHECK(worst <= 1e-12);
}

TEST_CASE("nilpotent directions terminate after two summands") {
  // ad(X2) and ad(X3) kill their own images, so the series is exact at 2 terms
  // and additional summands change nothing bitwise.
  for (int i : {2, 3})
    for (int j = 1; j <= 3; ++j) {
      const AlgebraElement two = adjoint_lie_series(i, j, 0.8, 2);
      const AlgebraElement many = adjoint_lie_series(i, j, 0.8, 20);
      CHECK(two == many);
    }
}

TEST_CASE("series argument validation") {
  CHECK_THROWS_AS(adjoint_lie_series(1, 1, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(adjoint_lie_series(1, 0, 0.5, 3), std::invalid_argument);
  // One summand is the identity action.
  CHECK(adjoint_lie_series(1, 2, 123.0, 1) == AlgebraElement(0, 1, 0));
}

TEST_CASE("reduction of a generic element") {
  const OptimalReduction red = reduce_to_optimal(AlgebraElement(1.0, 1.0, 0.0));
  CHECK(red.case_index == 2);
  REQUIRE(red.chain.size() == 1);
  CHECK(red.chain[0].first == 2);
  CHECK(red.chain[0].second == 3.0);
  CHECK(red.scale == 1.0);
  CHECK(red.representative == AlgebraElement(1.0, 0.0, 0.0));
}

TEST_CASE("reduction of a pure scaling element has an empty chain") {
  const OptimalReduction red = reduce_to_optimal(AlgebraElement(1.0, 0.0, 0.0));
  CHECK(red.case_index == 2);
  CHECK(red.chain.empty());
  CHECK(red.scale == 1.0);
  CHECK(red.representative == AlgebraElement(1.0, 0.0, 0.0));
}

TEST_CASE("reduction with both lower coefficients present") {
  const OptimalReduction red = reduce_to_optimal(AlgebraElement(2.0, 0.0, 4.0));
  CHECK(red.case_index == 2);
  REQUIRE(red.chain.size() == 1);
  CHECK(red.chain[0].first == 3);
  CHECK(red.chain[0].second == 12.0 / 7.0);
  CHECK(red.scale == 0.5);
}

TEST_CASE("reduction in the span of the translations") {
  const OptimalReduction r1 = reduce_to_optimal(AlgebraElement(0.0, 2.0, 0.0));
  CHECK(r1.case_index == 1);
  CHECK(r1.chain.empty());
  CHECK(r1.scale == 0.5);
  CHECK(r1.representative == AlgebraElement(0.0, 1.0, 0.0));

  const OptimalReduction r2 = reduce_to_optimal(AlgebraElement(0.0, 0.0, -5.0));
  CHECK(r2.case_index == 1);
  CHECK(r2.scale == -0.2);
  CHECK(r2.representative == AlgebraElement(0.0, 0.0, 1.0));

  const OptimalReduction r3 = reduce_to_optimal(AlgebraElement(0.0, -3.0, 1.0));
  CHECK(r3.case_index == 1);
  CHECK(r3.representative(1) == 1.0);
  CHECK(r3.representative(2) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("reduction rejects the zero element") {
  CHECK_THROWS_AS(reduce_to_optimal(AlgebraElement(0.0, 0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(reduce_to_optimal(AlgebraElement(1e-15, -1e-14, 1e-13)), std::domain_error);
  CHECK_THROWS_AS(reduce_to_optimal(AlgebraElement(1.0, 0.0, 0.0), -1.0), std::invalid_argument);
}

TEST_CASE("reduction invariant on seeded draws") {
  std::mt19937 rng(42);
  const auto draw = [&rng]() { return -2.0 + 4.0 * (rng() / 4294967295.0); };
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    AlgebraElement x(draw(), draw(), draw());
    if (k % 5 == 4) x(0) = 0.0;
    const OptimalReduction red = reduce_to_optimal(x);
    AlgebraElement y = red.input;
    for (const auto& [gen, s] : red.chain) y = adjoint_closed_form(gen, s).entries * y;
    y *= red.scale;
    worst = std::max(worst, (y - red.representative).cwiseAbs().maxCoeff());
    if (x(0) == 0.0) CHECK(red.case_index == 1);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("flows move points as the closed forms say") {
  const Point p{1.0, 2.0, 3.0};

  const Point q1 = flow(1, 3.0, p);
  CHECK(q1.x == std::exp(1.0) * 1.0);
  CHECK(q1.t == std::exp(3.0) * 2.0);
  CHECK(q1.u == std::exp(-2.0) * 3.0);

  const Point q2 = flow(2, -0.5, p);
  CHECK(q2.x == 0.5);
  CHECK(q2.t == 2.0);
  CHECK(q2.u == 3.0);

  const Point q3 = flow(3, 2.0, Point{0.0, 4.0, 0.0});
  CHECK(q3.x == 16.0);
  CHECK(q3.t == 4.0);
  CHECK(q3.u == 1.0);
}

TEST_CASE("flow domain and composition") {
  CHECK_THROWS_AS(flow(3, 1.0, Point{0.0, -1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(flow(5, 1.0, Point{0.0, 1.0, 0.0}), std::invalid_argument);

  const Point t0 = flow(3, 7.0, Point{2.0, 0.0, -1.0});  // t = 0 is allowed
  CHECK(t0.x == 2.0);
  CHECK(t0.u == -1.0);

  const Point p{-0.7, 1.3, 0.9};
  for (int i = 1; i <= 3; ++i) {
    const Point ab = flow(i, 0.2, flow(i, 0.5, p));
    const Point c = flow(i, 0.7, p);
    CHECK(std::abs(ab.x - c.x) <= 1e-14);
    CHECK(std::abs(ab.t - c.t) <= 1e-14);
    CHECK(std::abs(ab.u - c.u) <= 1e-14);

    const Point back = flow(i, -0.9, flow(i, 0.9, p));
    CHECK(std::abs(back.x - p.x) <= 1e-14);
    CHECK(std::abs(back.t - p.t) <= 1e-14);
    CHECK(std::abs(back.u - p.u) <= 1e-14);
  }
}

TEST_SUITE_END();
