#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace symkdv {

// Coefficient triple (a1, a2, a3) over the symmetry-algebra basis
//   X1 = (x/3) d/dx + t d/dt - (2u/3) d/du   (scaling)
//   X2 = d/dx                                (space translation)
//   X3 = t^{3/2} d/dx + (sqrt(t)/4) d/du     (Galilean-type boost)
using AlgebraElement = Eigen::Vector3d;

// Exact rational with small integer terms; keeps the structure constants and
// the Jacobi check free of rounding.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);  // normalizes sign and gcd; throws on d == 0

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Structure constants C[i][j][k] of the algebra, [X_i, X_j] = sum_k C[i][j][k] X_k,
// stored as exact rationals. The nonzero entries are
//   C[1][2][2] = -1/3,  C[1][3][3] = -7/6
// together with their antisymmetric partners; [X2, X3] = 0.
class StructureConstants {
 public:
  StructureConstants();

  // 1-based indices; throws std::invalid_argument outside 1..3.
  const Rational& c(int i, int j, int k) const;

  bool antisymmetric() const;           // C[i][j][k] == -C[j][i][k], exact
  bool jacobi_identity_exact() const;   // Jacobi identity in exact rational arithmetic

 private:
  Rational table_[3][3][3];
};

// Shared immutable instance of the algebra's structure constants.
const StructureConstants& structure_constants();

// Bilinear extension of the bracket to coefficient triples.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

// Matrix of Ad(exp(eps X_i)) acting on coefficient triples (column vectors).
struct AdjointMatrix {
  int generator = 1;
  double eps = 0.0;
  Eigen::Matrix3d entries = Eigen::Matrix3d::Identity();
};

// Closed form of the adjoint action, obtained by summing the Lie series
//   Ad(exp(s X_i)) X_j = X_j - s [X_i, X_j] + (s^2/2) [X_i, [X_i, X_j]] - ...
// to termination / in closed form:
//   i = 1: diag(1, e^{eps/3}, e^{7 eps/6})
//   i = 2: a2 -> a2 - (eps/3) a1      (series terminates after the linear term)
//   i = 3: a3 -> a3 - (7 eps/6) a1    (likewise)
AdjointMatrix adjoint_closed_form(int i, double eps);

// Partial sum of the same series with `terms` summands (k = 0 .. terms-1),
// applied to the basis element X_j.
AlgebraElement adjoint_lie_series(int i, int j, double s, int terms);

// Canonical representative of the line through X under the adjoint group.
struct OptimalReduction {
  AlgebraElement input = AlgebraElement::Zero();
  AlgebraElement representative = AlgebraElement::Zero();
  std::vector<std::pair<int, double>> chain;  // (generator, parameter) adjoint steps, applied in order
  double scale = 1.0;                         // scalar applied after the chain
  int case_index = 0;                         // 2: a1 != 0, representative (1,0,0); 1: a1 = 0, span{X2,X3}
};

// Reduce X to its optimal-system representative. For |a1| > tol, adjoint
// steps with generators 2 and 3 annihilate a2 and a3 and scaling by 1/a1
// lands exactly on (1, 0, 0). Otherwise a1 is treated as zero and (0, a2, a3)
// is normalized so the largest-magnitude coefficient has magnitude exactly 1
// and the first nonzero coefficient is positive. Throws std::domain_error on
// the zero element (all coefficients below tol).
OptimalReduction reduce_to_optimal(const AlgebraElement& x, double tol = 1e-12);

// Point in the (x, t, u) space the generators act on.
struct Point {
  double x = 0.0;
  double t = 0.0;
  double u = 0.0;
};

// Closed-form one-parameter flow of generator i through p:
//   i = 1: (e^{eps/3} x, e^{eps} t, e^{-2 eps/3} u)
//   i = 2: (x + eps, t, u)
//   i = 3: (x + eps t^{3/2}, t, u + eps sqrt(t)/4), requires t >= 0
Point flow(int i, double eps, const Point& p);

}  // namespace symkdv
