#pragma once

#include <string>
#include <vector>

#include "upsilon/graph.hpp"

namespace upsilon::testing {

inline Multigraph graph(std::vector<std::string> vertices, const std::vector<std::array<std::string, 3>>& edges) {
  return Multigraph(std::move(vertices), edges);
}

inline Multigraph loop_graph() { return graph({"v"}, {{"e", "v", "v"}}); }
inline Multigraph two_loops() { return graph({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}}); }
inline Multigraph banana() { return graph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}}); }
inline Multigraph theta() { return graph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}}); }
inline Multigraph single_edge() { return graph({"a", "b"}, {{"e", "a", "b"}}); }
inline Multigraph path2() { return graph({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}}); }
inline Multigraph triangle() {
  return graph({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}});
}
inline Multigraph k4() {
  return graph({"a", "b", "c", "d"}, {{"e1", "a", "b"},
                                      {"e2", "a", "c"},
                                      {"e3", "a", "d"},
                                      {"e4", "b", "c"},
                                      {"e5", "b", "d"},
                                      {"e6", "c", "d"}});
}
// Triangle with every side doubled.
inline Multigraph doubled_triangle() {
  return graph({"a", "b", "c"}, {{"e1", "a", "b"},
                                 {"e2", "a", "b"},
                                 {"e3", "b", "c"},
                                 {"e4", "b", "c"},
                                 {"e5", "c", "a"},
                                 {"e6", "c", "a"}});
}

}  // namespace upsilon::testing
