#include "turanl2/partition.hpp"

#include <algorithm>

#include "turanl2/errors.hpp"

namespace turanl2 {

Partition3::Partition3(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t v = 0; v < parts_.size(); ++v) {
    int p = parts_[v];
    if (p < 0 || p > 2)
      throw TuranError(ErrorCode::InvalidArgument, "part index out of range at vertex " + std::to_string(v));
    ++sizes_[p];
  }
}

Partition3 Partition3::fromSizes(int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw TuranError(ErrorCode::InvalidArgument, "negative part size");
  std::vector<int> parts;
  parts.insert(parts.end(), n1, 0);
  parts.insert(parts.end(), n2, 1);
  parts.insert(parts.end(), n3, 2);
  return Partition3(std::move(parts));
}

Partition3 Partition3::balanced(int n) {
  int base = n / 3, extra = n % 3;
  return fromSizes(base + (extra > 0), base + (extra > 1), base);
}

Partition3 Partition3::parse(std::string_view colours) {
  std::vector<int> parts;
  for (char c : colours) {
    if (c < '1' || c > '3')
      throw TuranError(ErrorCode::ParseError, std::string("bad colour character '") + c + "'");
    parts.push_back(c - '1');
  }
  return Partition3(std::move(parts));
}

int Partition3::maxPartSize() const { return *std::max_element(sizes_.begin(), sizes_.end()); }

std::vector<Vertex> Partition3::members(int i) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v)
    if (parts_[v] == i) out.push_back(v);
  return out;
}

std::string Partition3::toString() const {
  std::string s;
  s.reserve(parts_.size());
  for (int p : parts_) s.push_back(static_cast<char>('1' + p));
  return s;
}

}  // namespace turanl2
