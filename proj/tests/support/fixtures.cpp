#include "fixtures.hpp"

namespace spl::fixtures {

const char* const kFilHered = R"(vertex w
vertex v
sink s
vertex u
edge e w v
edge f v v
edge g v s
edge h u s
)";

const char* const kFilIdeal = R"(vertex x
vertex w
vertex v
sink s
vertex u
edge f x w
edge c2 w w
edge e w v
edge c1 v v
edge g v s
edge h u s
)";

const char* const kHedgehog = R"(vertex v3
vertex v2
vertex v1
vertex v0
sink v
edge e3 v3 v1
edge e2 v2 v1
edge e1 v1 v0
edge e0 v0 v0
edge e v0 v
)";

const char* const kStructure = R"(vertex v4
vertex v3
vertex v2
vertex v1
sink s
edge C4 v4 v4
edge f42 v4 v2
edge f43 v4 v3
edge C3 v3 v3
edge f31 v3 v1
edge e1 v2 v2
edge e2 v2 v2
edge f21 v2 v1
edge C1 v1 v1
edge f1s v1 s
)";

std::string e_k(int k) { return loops_and_exits(0, k); }

std::string example2() { return loops_and_exits(3, 1); }

std::string loops_and_exits(int n, int k) {
  std::string out = "vertex v\nsink s\n";
  for (int i = 1; i <= n; ++i) out += "edge l" + std::to_string(i) + " v v\n";
  for (int i = 1; i <= k; ++i) out += "edge x" + std::to_string(i) + " v s\n";
  return out;
}

std::string trivial() { return "sink s\n"; }

SandpileGraph load(const std::string& text) { return parse_sandpile(text); }

}  // namespace spl::fixtures
