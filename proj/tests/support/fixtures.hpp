#pragma once

#include <string>

#include "spl/graph.hpp"
#include "spl/io.hpp"

namespace spl::fixtures {

// Worked example graphs, in the graph file format.
extern const char* const kFilHered;
extern const char* const kFilIdeal;
extern const char* const kHedgehog;
extern const char* const kStructure;

std::string e_k(int k);                        // k parallel edges v -> s
std::string example2();                        // three loops at v, one edge v -> s
std::string loops_and_exits(int n, int k);     // n loops at v, k edges v -> s
std::string trivial();                         // a lone sink

SandpileGraph load(const std::string& text);

}  // namespace spl::fixtures
