#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "turanl2/hypergraph.hpp"
#include "turanl2/rational.hpp"

namespace turanl2 {

/// RHS - LHS of the simplex inequality at (x1, x2, x3), exact.
Rational simplexMargin(const Rational& x1, const Rational& x2, const Rational& x3);

struct SimplexGridReport {
  int resolution = 0;
  Rational worstMargin;
  std::array<int, 3> argmin{};               // grid coordinates, sum = resolution
  std::vector<std::array<int, 3>> zeros;     // every grid point with margin exactly 0
  Rational worstRatio;                        // min over non-barycentric points of margin / sum (x_i - 1/3)^2
  std::uint64_t points = 0;
  bool pass() const;  // margin >= 0 everywhere, zero only at the barycenter
};

SimplexGridReport verifySimplexInequality(int resolution, unsigned workers = 0);

/// Bivariate polynomial with exact coefficients keyed by (deg u, deg v).
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(const Rational& c);
  static Poly2 u();
  static Poly2 v();

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rational& c) const;

  Rational operator()(const Rational& u, const Rational& v) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coefficient(int i, int j) const;

 private:
  void prune();
  std::map<std::pair<int, int>, Rational> terms_;
};

/// The margin in coordinates u = x1 - 1/3, v = x2 - 1/3.
Poly2 simplexMarginPolynomial();

struct IntervalBox {
  double uLo, uHi, vLo, vHi;
};

struct IntervalCertificate {
  double minWidth = 0;
  std::uint64_t boxes = 0;  // every box visited, split ones included
  std::uint64_t ballBoxes = 0;      // certified by the quadratic-vs-cubic ball bound
  std::uint64_t intervalBoxes = 0;  // certified by interval evaluation
  std::uint64_t outsideBoxes = 0;
  Rational ballRadius;              // the bound holds on the disc of this radius around the barycenter
  std::vector<IntervalBox> undecided;
  bool certified() const { return undecided.empty(); }
};

/// Quadtree over the simplex in (u, v). Each box is certified when it lies
/// in the barycentric ball or when the outward-rounded interval value of
/// the margin is >= 0; boxes narrower than minWidth are reported undecided.
IntervalCertificate certifySimplexInequality(double minWidth = 1e-9);

struct SpreadReport {
  std::vector<std::int64_t> s;
  std::int64_t maxPairGap = 0;
  Rational vsAverageGap;
  std::int64_t bound = 0;  // 60 n^2
  bool withinBound() const { return maxPairGap <= bound; }
};

SpreadReport sSpread(const ThreeGraph& h);

/// v becomes a copy of u: edges at v are dropped, and each {u,a,b} with
/// a, b != v gains the twin {v,a,b}.
ThreeGraph duplicateVertex(const ThreeGraph& h, Vertex u, Vertex v);

}  // namespace turanl2
