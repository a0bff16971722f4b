#include "turanl2/inequality_lab.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <limits>
#include <optional>

#include "turanl2/errors.hpp"
#include "turanl2/parallel.hpp"

namespace turanl2 {

Rational simplexMargin(const Rational& x1, const Rational& x2, const Rational& x3) {
  Rational lhs = x1 * x2 * x3 + x1 * x1 * x2 / 2 + x2 * x2 * x3 / 2 + x3 * x3 * x1 / 2;
  Rational third = rat(1, 3);
  Rational dev = (x1 - third) * (x1 - third) + (x2 - third) * (x2 - third) + (x3 - third) * (x3 - third);
  return rat(5, 54) - dev / 50 - lhs;
}

bool SimplexGridReport::pass() const {
  if (worstMargin < 0) return false;
  for (const auto& z : zeros)
    if (!(3 * z[0] == resolution && z[0] == z[1] && z[1] == z[2])) return false;
  return true;
}

SimplexGridReport verifySimplexInequality(int resolution, unsigned workers) {
  if (resolution < 1) throw TuranError(ErrorCode::InvalidArgument, "resolution must be >= 1");
  const int d = resolution;
  struct Row {
    std::optional<Rational> worst;
    std::array<int, 3> arg{};
    std::vector<std::array<int, 3>> zeros;
    std::optional<Rational> ratio;
    std::uint64_t points = 0;
  };
  std::vector<Row> rows(d + 1);
  parallelFor(rows.size(), workers, [&](std::size_t ai) {
    const int a = static_cast<int>(ai);
    Row& row = rows[ai];
    for (int b = 0; a + b <= d; ++b) {
      const int c = d - a - b;
      Rational x1 = rat(a, d), x2 = rat(b, d), x3 = rat(c, d);
      Rational m = simplexMargin(x1, x2, x3);
      ++row.points;
      if (!row.worst || m < *row.worst) {
        row.worst = m;
        row.arg = {a, b, c};
      }
      if (m == 0) row.zeros.push_back({a, b, c});
      Rational third = rat(1, 3);
      Rational dev = (x1 - third) * (x1 - third) + (x2 - third) * (x2 - third) + (x3 - third) * (x3 - third);
      if (dev != 0) {
        Rational ratio = m / dev;
        if (!row.ratio || ratio < *row.ratio) row.ratio = ratio;
      }
    }
  });
  SimplexGridReport r;
  r.resolution = d;
  bool have = false, haveRatio = false;
  for (auto& row : rows) {
    r.points += row.points;
    if (row.worst && (!have || *row.worst < r.worstMargin)) {
      r.worstMargin = *row.worst;
      r.argmin = row.arg;
      have = true;
    }
    if (row.ratio && (!haveRatio || *row.ratio < r.worstRatio)) {
      r.worstRatio = *row.ratio;
      haveRatio = true;
    }
    r.zeros.insert(r.zeros.end(), row.zeros.begin(), row.zeros.end());
  }
  return r;
}

// ------------------------------------------------------------------ Poly2

Poly2 Poly2::constant(const Rational& c) {
  Poly2 p;
  p.terms_[{0, 0}] = c;
  p.prune();
  return p;
}

Poly2 Poly2::u() {
  Poly2 p;
  p.terms_[{1, 0}] = 1;
  return p;
}

Poly2 Poly2::v() {
  Poly2 p;
  p.terms_[{0, 1}] = 1;
  return p;
}

void Poly2::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 p = *this;
  for (const auto& [k, c] : o.terms_) p.terms_[k] += c;
  p.prune();
  return p;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o * Rational(-1); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 p;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) p.terms_[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  p.prune();
  return p;
}

Poly2 Poly2::operator*(const Rational& c) const {
  Poly2 p;
  for (const auto& [k, x] : terms_) p.terms_[k] = x * c;
  p.prune();
  return p;
}

Rational Poly2::operator()(const Rational& u, const Rational& v) const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k.first; ++i) t *= u;
    for (int j = 0; j < k.second; ++j) t *= v;
    sum += t;
  }
  return sum;
}

Rational Poly2::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly2 simplexMarginPolynomial() {
  const Poly2 third = Poly2::constant(rat(1, 3));
  const Poly2 x1 = third + Poly2::u();
  const Poly2 x2 = third + Poly2::v();
  const Poly2 x3 = Poly2::constant(1) - x1 - x2;
  const Poly2 half = Poly2::constant(rat(1, 2));
  Poly2 lhs = x1 * x2 * x3 + half * x1 * x1 * x2 + half * x2 * x2 * x3 + half * x3 * x3 * x1;
  Poly2 d1 = x1 - third, d2 = x2 - third, d3 = x3 - third;
  Poly2 dev = d1 * d1 + d2 * d2 + d3 * d3;
  return Poly2::constant(rat(5, 54)) - dev * rat(1, 50) - lhs;
}

// -------------------------------------------------------------- intervals

namespace {

struct Interval {
  double lo, hi;
};

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

Interval add(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval mul(Interval a, Interval b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval power(Interval a, int k) {
  if (k == 0) return {1.0, 1.0};
  Interval r = a;
  for (int i = 1; i < k; ++i) r = mul(r, a);
  if (k % 2 == 0 && a.lo < 0 && a.hi > 0) r.lo = 0;
  return r;
}

Interval enclose(const Rational& q) {
  double x = static_cast<double>(q);
  return {down(x), up(x)};
}

struct IntervalPoly {
  std::vector<std::tuple<int, int, Interval>> terms;
  Interval eval(Interval u, Interval v) const {
    Interval sum{0.0, 0.0};
    for (const auto& [i, j, c] : terms) sum = add(sum, mul(c, mul(power(u, i), power(v, j))));
    return sum;
  }
};

// Quadratic part (22/75)(u^2+uv+v^2) >= (11/75) r^2 and |u^i v^j| <= r^3 for
// i + j = 3, so the margin is >= r^2 (11/75 - K r) with K the cubic l1 norm.
Rational ballRadiusFor(const Poly2& f) {
  Rational lambda = rat(11, 75);
  Rational k = 0;
  for (const auto& [key, c] : f.terms())
    if (key.first + key.second == 3) k += absValue(c);
  return lambda / k;
}

bool insideBall(const IntervalBox& b, double radius) {
  for (double u : {b.uLo, b.uHi})
    for (double v : {b.vLo, b.vHi}) {
      double r2 = up(up(u * u) + up(v * v));
      if (r2 > radius * radius) return false;
    }
  return true;
}

}  // namespace

IntervalCertificate certifySimplexInequality(double minWidth) {
  if (!(minWidth > 0)) throw TuranError(ErrorCode::InvalidArgument, "minimum width must be positive");
  const Poly2 f = simplexMarginPolynomial();
  IntervalCertificate cert;
  cert.minWidth = minWidth;
  cert.ballRadius = ballRadiusFor(f);
  // The ball argument needs the quadratic part to be exactly (22/75)(u^2+uv+v^2).
  bool quadraticOk = f.coefficient(2, 0) == rat(22, 75) && f.coefficient(1, 1) == rat(22, 75) &&
                     f.coefficient(0, 2) == rat(22, 75) && f.coefficient(0, 0) == 0 && f.coefficient(1, 0) == 0 &&
                     f.coefficient(0, 1) == 0;
  const double radius = quadraticOk ? down(static_cast<double>(cert.ballRadius)) : 0.0;

  IntervalPoly ip;
  for (const auto& [key, c] : f.terms()) ip.terms.emplace_back(key.first, key.second, enclose(c));

  const double third = 1.0 / 3.0;
  std::vector<IntervalBox> stack{{down(-third), up(2 * third), down(-third), up(2 * third)}};
  while (!stack.empty()) {
    IntervalBox b = stack.back();
    stack.pop_back();
    ++cert.boxes;
    // Simplex in (u,v): u >= -1/3, v >= -1/3, u + v <= 1/3.
    if (b.uLo + b.vLo > up(third) && down(b.uLo + b.vLo) > third) {
      ++cert.outsideBoxes;
      continue;
    }
    if (radius > 0 && insideBall(b, radius)) {
      ++cert.ballBoxes;
      continue;
    }
    Interval value = ip.eval({b.uLo, b.uHi}, {b.vLo, b.vHi});
    if (value.lo >= 0) {
      ++cert.intervalBoxes;
      continue;
    }
    if (b.uHi - b.uLo < minWidth) {
      cert.undecided.push_back(b);
      continue;
    }
    double um = 0.5 * (b.uLo + b.uHi), vm = 0.5 * (b.vLo + b.vHi);
    stack.push_back({b.uLo, um, b.vLo, vm});
    stack.push_back({um, b.uHi, b.vLo, vm});
    stack.push_back({b.uLo, um, vm, b.vHi});
    stack.push_back({um, b.uHi, vm, b.vHi});
  }
  return cert;
}

// ----------------------------------------------------------------- spread

SpreadReport sSpread(const ThreeGraph& h) {
  SpreadReport r;
  const int n = h.n();
  r.bound = 60LL * n * n;
  if (n == 0) return r;
  for (Vertex v = 0; v < n; ++v) r.s.push_back(twoNormDegree(h, v));
  auto [mn, mx] = std::minmax_element(r.s.begin(), r.s.end());
  r.maxPairGap = *mx - *mn;
  Rational mean = 0;
  for (auto x : r.s) mean += x;
  mean /= n;
  r.vsAverageGap = 0;
  for (auto x : r.s) r.vsAverageGap = std::max(r.vsAverageGap, absValue(Rational(x) - mean));
  return r;
}

ThreeGraph duplicateVertex(const ThreeGraph& h, Vertex u, Vertex v) {
  checkVertex(h.n(), u);
  checkVertex(h.n(), v);
  if (u == v) throw TuranError(ErrorCode::SameVertex, "duplicateVertex needs u != v");
  std::vector<Triple> edges;
  for (const auto& t : h.edges()) {
    if (t.contains(v)) continue;
    edges.push_back(t);
    if (t.contains(u)) {
      Pair rest = Pair::of(t.a == u ? t.b : t.a, t.c == u ? t.b : t.c);
      edges.push_back(Triple::of(v, rest.u, rest.v));
    }
  }
  return ThreeGraph(h.n(), std::move(edges));
}

}  // namespace turanl2
