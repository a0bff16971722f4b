#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "turanl2/colored_graph.hpp"
#include "turanl2/hypergraph.hpp"
#include "turanl2/partition.hpp"

namespace turanl2 {

// .h3: "n m" then m lines "a b c".
ThreeGraph readH3(std::istream& in);
void writeH3(std::ostream& out, const ThreeGraph& h);
ThreeGraph loadH3(const std::filesystem::path& path);
void saveH3(const std::filesystem::path& path, const ThreeGraph& h);

// .p3: one line, colour string over {1,2,3}.
Partition3 readP3(std::istream& in);
void writeP3(std::ostream& out, const Partition3& p);
Partition3 loadP3(const std::filesystem::path& path);
void saveP3(const std::filesystem::path& path, const Partition3& p);

// .cg: "n", colour string, "m", then m lines "a b".
ColoredGraph readCg(std::istream& in);
void writeCg(std::ostream& out, const ColoredGraph& g);
ColoredGraph loadCg(const std::filesystem::path& path);
void saveCg(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace turanl2
