#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "turanl2/hypergraph.hpp"

namespace turanl2 {

/// Three-part vertex partition. Parts are indexed 0,1,2 internally and shown
/// as 1,2,3 in every text format. Index arithmetic is cyclic: next(i) = i+1 mod 3.
class Partition3 {
 public:
  Partition3() = default;
  /// `parts[v]` in {0,1,2}.
  explicit Partition3(std::vector<int> parts);

  /// Consecutive label ranges [0,n1), [n1,n1+n2), [n1+n2,n).
  static Partition3 fromSizes(int n1, int n2, int n3);
  /// Near-balanced split of 0..n-1 by label, larger parts first.
  static Partition3 balanced(int n);
  /// Colour string over {1,2,3}.
  static Partition3 parse(std::string_view colours);

  int n() const { return static_cast<int>(parts_.size()); }
  int part(Vertex v) const { return parts_[v]; }
  int size(int i) const { return sizes_[i]; }
  std::array<int, 3> sizes() const { return sizes_; }
  int maxPartSize() const;
  std::vector<Vertex> members(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  std::string toString() const;

  bool operator==(const Partition3& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  std::array<int, 3> sizes_{0, 0, 0};
};

inline int nextPart(int i) { return (i + 1) % 3; }
inline int prevPart(int i) { return (i + 2) % 3; }

}  // namespace turanl2
