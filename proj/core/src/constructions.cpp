#include "turanl2/constructions.hpp"

#include <algorithm>
#include <set>

#include "turanl2/errors.hpp"

namespace turanl2 {

bool Composition3::nearBalanced() const {
  return std::max({n1, n2, n3}) - std::min({n1, n2, n3}) <= 1;
}

std::string Composition3::toString() const {
  return std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3);
}

std::vector<Composition3> compositions(int n) {
  std::vector<Composition3> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) out.push_back({a, b, n - a - b});
  return out;
}

Composition3 rotationRepresentative(const Composition3& c) {
  return std::max({c, c.rotated(), c.rotated().rotated()});
}

bool isCTriple(const Partition3& p, const Triple& t) {
  std::array<int, 3> k{0, 0, 0};
  ++k[p.part(t.a)];
  ++k[p.part(t.b)];
  ++k[p.part(t.c)];
  if (k[0] == 1 && k[1] == 1) return true;
  for (int i = 0; i < 3; ++i)
    if (k[i] == 2 && k[nextPart(i)] == 1) return true;
  return false;
}

PartitionedThreeGraph buildC(const Composition3& c) {
  Partition3 p = Partition3::fromSizes(c.n1, c.n2, c.n3);
  std::vector<Triple> edges;
  const int n = c.n();
  for (Vertex z = 2; z < n; ++z)
    for (Vertex y = 1; y < z; ++y)
      for (Vertex x = 0; x < y; ++x)
        if (isCTriple(p, Triple{x, y, z})) edges.push_back(Triple{x, y, z});
  return {ThreeGraph(n, std::move(edges)), std::move(p)};
}

PartitionedThreeGraph buildBalancedC(int n) {
  auto sizes = Partition3::balanced(n).sizes();
  return buildC({sizes[0], sizes[1], sizes[2]});
}

BipartiteConstruction buildB(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw TuranError(ErrorCode::InvalidArgument, "negative part size");
  const int n = n1 + n2;
  std::vector<int> side(n, 0);
  for (int v = n1; v < n; ++v) side[v] = 1;
  std::vector<Triple> edges;
  for (Vertex z = 2; z < n; ++z)
    for (Vertex y = 1; y < z; ++y)
      for (Vertex x = 0; x < y; ++x) {
        int ones = side[x] + side[y] + side[z];
        if (ones == 1 || ones == 2) edges.push_back(Triple{x, y, z});
      }
  return {ThreeGraph(n, std::move(edges)), std::move(side)};
}

Rational cL2Closed(const Composition3& c) {
  // The cyclic sum with x_i = n_i / n substituted, times 2.
  const BigInt n = c.n();
  if (n == 0) return Rational(0);
  BigInt twice = 0;
  for (int i = 0; i < 3; ++i) {
    BigInt a = c[i], b = c[nextPart(i)], d = c[prevPart(i)];
    BigInt ab = a * b;
    twice += ab * (2 * (a + d) * (a + d) + ab);
    twice -= ab * (4 * a + b + 4 * d);
    twice += 2 * ab;
  }
  return Rational(twice) / 2;
}

LowerBoundReport cLowerBoundCheck(const Rational& delta, const Composition3& c) {
  LowerBoundReport r;
  const int n = c.n();
  Rational n4 = Rational(n) * n * n * n;
  r.lhs = cL2Closed(c);
  r.rhs = n4 / 6 - 2 * delta * n4;
  r.holds = r.lhs >= r.rhs;
  if (delta <= 0 || delta >= Rational(1, 3)) {
    r.reason = "delta outside (0,1/3)";
  } else if (n == 0 || Rational(n) < Rational(9) / (2 * delta * delta)) {
    r.reason = "n below 9/(2 delta^2)";
  } else {
    r.preconditionMet = true;
    for (int i = 0; i < 3; ++i)
      if (Rational(c[i]) / n < Rational(1, 3) - delta) {
        r.preconditionMet = false;
        r.reason = "part " + std::to_string(i + 1) + " smaller than (1/3 - delta) n";
      }
  }
  return r;
}

namespace {

Rational caseOneGain(const Composition3& c) {
  Rational a = c.n1, b = c.n2, d = c.n3;
  return a * a * d + 2 * a * (b * b + d * d - b - d) + b * b * b - d * d * d - 2 * b * b * d - 3 * b * d * d -
         Rational(7, 2) * b * b - Rational(1, 2) * d * d + 2 * b * d + Rational(5, 2) * b + Rational(1, 2) * d;
}

Rational caseTwoGain(const Composition3& c) {
  Rational a = c.n1, b = c.n2, d = c.n3;
  return (1 - a) * b * b - 2 * b * (a * a + d * d - 2 * a - d + 1) + a * a * a - Rational(9, 2) * a * a +
         Rational(13, 2) * a - d * d * d - Rational(1, 2) * d * d + Rational(9, 2) * d + 3 * a * a * d +
         2 * a * d * d - 8 * a * d - 3;
}

void addGain(SweepReport& report, std::string family, const Composition3& from, const Composition3& to,
             Rational expected) {
  GainCheck g;
  g.family = std::move(family);
  g.from = from;
  g.to = to;
  g.expected = std::move(expected);
  g.actual = cL2Closed(to) - cL2Closed(from);
  g.pass = g.actual == g.expected;
  report.gains.push_back(std::move(g));
}

}  // namespace

bool SweepReport::gainsPass() const {
  return std::all_of(gains.begin(), gains.end(), [](const GainCheck& g) { return g.pass; });
}

SweepReport balancednessSweep(int n) {
  if (n < 0) throw TuranError(ErrorCode::InvalidArgument, "negative n");
  SweepReport report;
  report.n = n;
  report.inStatedRange = n >= 6;
  auto all = compositions(n);
  std::vector<Rational> value;
  value.reserve(all.size());
  for (const auto& c : all) value.push_back(cL2Closed(c));
  report.maximum = *std::max_element(value.begin(), value.end());

  report.maximizersNearBalanced = true;
  report.nearBalancedAttain = true;
  std::set<Composition3> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& c = all[i];
    bool isMax = value[i] == report.maximum;
    if (isMax) report.maximizers.push_back(c);
    if (isMax && !c.nearBalanced()) report.maximizersNearBalanced = false;
    if (!isMax && c.nearBalanced()) report.nearBalancedAttain = false;
    if (seen.insert(rotationRepresentative(c)).second) {
      report.representatives.push_back(rotationRepresentative(c));
      report.values.push_back(value[i]);
    }
  }

  for (const auto& c : all) {
    const int a = c.n1, b = c.n2, d = c.n3;
    if (a >= b && b >= d && a >= d + 2) {
      Composition3 to{a - 1, b, d + 1};
      addGain(report, "case1", c, to, caseOneGain(c));
      if (a == b && a == d + 2) addGain(report, "case1_n1=n2=n3+2", c, to, Rational(6 * d * d + 13 * d + 7));
      if (a == d + 2 && b == d + 1) addGain(report, "case1_n2=n3+1", c, to, Rational(6 * d * d + 3 * d));
      if (a == d + 2 && b == d) addGain(report, "case1_n2=n3", c, to, Rational(6 * d * d - d));
    }
    if (a >= d && d >= b && a >= b + 2) {
      Composition3 to{a - 1, b + 1, d};
      addGain(report, "case2", c, to, caseTwoGain(c));
      if (b == d && a == b + 2) addGain(report, "case2_n2=n3", c, to, Rational(6 * b * b - b));
      if (b == a - 2 && d == a) addGain(report, "case2_n3=n1", c, to, Rational(6 * a * a - 11 * a + 5));
      if (b == a - 2 && d == a - 1) addGain(report, "case2_n3=n1-1", c, to, Rational(6 * a * a - 15 * a + 9));
      if (b == a - 2 && d == a - 2) addGain(report, "case2_n3=n1-2", c, to, Rational(6 * a * a - 25 * a + 26));
    }
  }
  return report;
}

}  // namespace turanl2
