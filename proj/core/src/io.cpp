#include "turanl2/io.hpp"

#include <fstream>
#include <sstream>

#include "turanl2/errors.hpp"

namespace turanl2 {
namespace {

template <typename T>
T readValue(std::istream& in, const char* what) {
  T value;
  if (!(in >> value)) throw TuranError(ErrorCode::ParseError, std::string("expected ") + what);
  return value;
}

std::ifstream openIn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TuranError(ErrorCode::ParseError, "cannot open " + path.string());
  return in;
}

std::ofstream openOut(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw TuranError(ErrorCode::InvalidArgument, "cannot write " + path.string());
  return out;
}

}  // namespace

ThreeGraph readH3(std::istream& in) {
  int n = readValue<int>(in, "vertex count");
  long long m = readValue<long long>(in, "edge count");
  if (n < 0 || m < 0) throw TuranError(ErrorCode::ParseError, "negative header value");
  std::vector<std::array<Vertex, 3>> triples;
  triples.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::array<Vertex, 3> t{};
    for (auto& x : t) x = readValue<int>(in, "triple vertex");
    triples.push_back(t);
  }
  return makeThreeGraph(n, triples);
}

void writeH3(std::ostream& out, const ThreeGraph& h) {
  out << h.n() << ' ' << h.size() << '\n';
  for (const auto& t : h.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

ThreeGraph loadH3(const std::filesystem::path& path) {
  auto in = openIn(path);
  return readH3(in);
}

void saveH3(const std::filesystem::path& path, const ThreeGraph& h) {
  auto out = openOut(path);
  writeH3(out, h);
}

Partition3 readP3(std::istream& in) { return Partition3::parse(readValue<std::string>(in, "colour string")); }

void writeP3(std::ostream& out, const Partition3& p) { out << p.toString() << '\n'; }

Partition3 loadP3(const std::filesystem::path& path) {
  auto in = openIn(path);
  return readP3(in);
}

void saveP3(const std::filesystem::path& path, const Partition3& p) {
  auto out = openOut(path);
  writeP3(out, p);
}

ColoredGraph readCg(std::istream& in) {
  int n = readValue<int>(in, "vertex count");
  Partition3 p = n == 0 ? Partition3() : Partition3::parse(readValue<std::string>(in, "colour string"));
  if (p.n() != n) throw TuranError(ErrorCode::ParseError, "colour string length differs from n");
  long long m = readValue<long long>(in, "edge count");
  std::vector<std::array<Vertex, 2>> pairs;
  for (long long i = 0; i < m; ++i) {
    int a = readValue<int>(in, "edge endpoint");
    int b = readValue<int>(in, "edge endpoint");
    pairs.push_back({a, b});
  }
  return ColoredGraph(Graph::make(n, pairs), std::move(p));
}

void writeCg(std::ostream& out, const ColoredGraph& g) {
  out << g.n() << '\n' << g.partition.toString() << '\n' << g.graph.size() << '\n';
  for (const auto& e : g.graph.edges()) out << e.u << ' ' << e.v << '\n';
}

ColoredGraph loadCg(const std::filesystem::path& path) {
  auto in = openIn(path);
  return readCg(in);
}

void saveCg(const std::filesystem::path& path, const ColoredGraph& g) {
  auto out = openOut(path);
  writeCg(out, g);
}

}  // namespace turanl2
