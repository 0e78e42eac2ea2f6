#include "symkdv/lie.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symkdv {

namespace {

void check_generator(int i, const char* where) {
  if (i < 1 || i > 3)
    throw std::invalid_argument(std::string(where) + ": generator index must be 1, 2, or 3, got " +
                                std::to_string(i));
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(std::llabs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

StructureConstants::StructureConstants() {
  const auto set = [this](int i, int j, int k, long long num, long long den) {
    table_[i - 1][j - 1][k - 1] = Rational(num, den);
    table_[j - 1][i - 1][k - 1] = Rational(-num, den);
  };
  set(1, 2, 2, -1, 3);  // [X1, X2] = -(1/3) X2
  set(1, 3, 3, -7, 6);  // [X1, X3] = -(7/6) X3
  // [X2, X3] = 0: all remaining entries stay zero.
}

const Rational& StructureConstants::c(int i, int j, int k) const {
  check_generator(i, "StructureConstants::c");
  check_generator(j, "StructureConstants::c");
  check_generator(k, "StructureConstants::c");
  return table_[i - 1][j - 1][k - 1];
}

bool StructureConstants::antisymmetric() const {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (!(c(i, j, k) == -c(j, i, k))) return false;
  return true;
}

bool StructureConstants::jacobi_identity_exact() const {
  // sum_l (C[i][j][l] C[l][k][m] + C[j][k][l] C[l][i][m] + C[k][i][l] C[l][j][m]) = 0
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m) {
          Rational sum;
          for (int l = 1; l <= 3; ++l) {
            sum = sum + c(i, j, l) * c(l, k, m);
            sum = sum + c(j, k, l) * c(l, i, m);
            sum = sum + c(k, i, l) * c(l, j, m);
          }
          if (!sum.is_zero()) return false;
        }
  return true;
}

const StructureConstants& structure_constants() {
  static const StructureConstants sc;
  return sc;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  const StructureConstants& sc = structure_constants();
  AlgebraElement out = AlgebraElement::Zero();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        const Rational& r = sc.c(i, j, k);
        if (!r.is_zero()) out(k - 1) += x(i - 1) * y(j - 1) * r.value();
      }
  return out;
}

AdjointMatrix adjoint_closed_form(int i, double eps) {
  check_generator(i, "adjoint_closed_form");
  AdjointMatrix m;
  m.generator = i;
  m.eps = eps;
  switch (i) {
    case 1:
      m.entries(1, 1) = std::exp(eps / 3.0);
      m.entries(2, 2) = std::exp(7.0 * eps / 6.0);
      break;
    case 2:
      m.entries(1, 0) = -eps / 3.0;
      break;
    case 3:
      m.entries(2, 0) = -7.0 * eps / 6.0;
      break;
  }
  return m;
}

AlgebraElement adjoint_lie_series(int i, int j, double s, int terms) {
  check_generator(i, "adjoint_lie_series");
  check_generator(j, "adjoint_lie_series");
  if (terms < 1)
    throw std::invalid_argument("adjoint_lie_series: terms must satisfy terms >= 1, got " +
                                std::to_string(terms));
  AlgebraElement xi = AlgebraElement::Zero();
  xi(i - 1) = 1.0;
  AlgebraElement term = AlgebraElement::Zero();
  term(j - 1) = 1.0;              // k = 0 summand
  AlgebraElement acc = term;
  for (int k = 1; k < terms; ++k) {
    term = commutator(xi, term) * (-s / k);  // (-s)^k/k! ad^k, built recursively
    acc += term;
  }
  return acc;
}

OptimalReduction reduce_to_optimal(const AlgebraElement& x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("reduce_to_optimal: tol must be positive");
  if (!x.allFinite()) throw std::invalid_argument("reduce_to_optimal: coefficients must be finite");

  OptimalReduction red;
  red.input = x;
  const double a1 = x(0), a2 = x(1), a3 = x(2);

  if (std::abs(a1) > tol) {
    // Generic orbit: kill a2 with an X2 step, a3 with an X3 step, scale to X1.
    red.case_index = 2;
    if (a2 != 0.0) red.chain.emplace_back(2, 3.0 * a2 / a1);
    if (a3 != 0.0) red.chain.emplace_back(3, 6.0 * a3 / (7.0 * a1));
    red.scale = 1.0 / a1;
    red.representative = AlgebraElement(1.0, 0.0, 0.0);
    return red;
  }

  // a1 treated as zero: the adjoint action cannot leave span{X2, X3}, so only
  // normalize. Largest-magnitude coefficient becomes exactly +-1; the sign is
  // chosen so the first coefficient above tol is positive.
  const double mag = std::max(std::abs(a2), std::abs(a3));
  if (mag <= tol)
    throw std::domain_error("reduce_to_optimal: zero element (all coefficients below tol) is degenerate");
  red.case_index = 1;
  const double lead = (std::abs(a2) > tol) ? a2 : a3;
  const double sign = (lead < 0.0) ? -1.0 : 1.0;
  red.scale = sign / mag;
  // Divide by mag componentwise: x / |x| is exact, so the leading magnitude
  // lands on 1.0 bitwise (scale * x would round twice and can miss it).
  red.representative = AlgebraElement(0.0, sign * (a2 / mag), sign * (a3 / mag));
  return red;
}

Point flow(int i, double eps, const Point& p) {
  check_generator(i, "flow");
  switch (i) {
    case 1:
      return Point{std::exp(eps / 3.0) * p.x, std::exp(eps) * p.t, std::exp(-2.0 * eps / 3.0) * p.u};
    case 2:
      return Point{p.x + eps, p.t, p.u};
    default: {  // i == 3
      if (p.t < 0.0)
        throw std::domain_error("flow: generator 3 needs t >= 0 (t^{3/2} must be real), got t = " +
                                std::to_string(p.t));
      const double rt = std::sqrt(p.t);
      return Point{p.x + eps * rt * rt * rt, p.t, p.u + eps * rt / 4.0};
    }
  }
}

}  // namespace symkdv
