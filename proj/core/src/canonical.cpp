#include "turanl2/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "turanl2/errors.hpp"

namespace turanl2 {
namespace {

std::vector<int> refineColours(const ThreeGraph& h) {
  const int n = h.n();
  CodegreeTable d(h);
  std::vector<int> colour(n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<long long>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<long long> around;
      for (Vertex w = 0; w < n; ++w)
        if (w != v) around.push_back(static_cast<long long>(colour[w]) * 4096 + d(v, w));
      std::sort(around.begin(), around.end());
      sig[v].push_back(colour[v]);
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<long long>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

std::vector<Triple> relabelled(const ThreeGraph& h, const std::vector<Vertex>& label) {
  std::vector<Triple> out;
  out.reserve(h.size());
  for (const auto& t : h.edges()) out.push_back(Triple::of(label[t.a], label[t.b], label[t.c]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CanonicalForm canonicalForm(const ThreeGraph& h, int maxN) {
  const int n = h.n();
  if (n > maxN)
    throw TuranError(ErrorCode::SizeLimitExceeded,
                     "canonical form needs n <= " + std::to_string(maxN) + ", got " + std::to_string(n));

  std::vector<int> colour = refineColours(h);
  // Vertices sorted by colour; each cell occupies a contiguous label block.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  CanonicalForm best;
  best.n = n;
  bool have = false;
  std::vector<Vertex> label(n);
  // Odometer over per-cell permutations of `order`.
  for (;;) {
    for (int i = 0; i < n; ++i) label[order[i]] = i;
    auto edges = relabelled(h, label);
    if (!have || edges < best.edges) {
      best.edges = std::move(edges);
      best.relabel = label;
      have = true;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [lo, hi] = cells[c];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

}  // namespace turanl2
