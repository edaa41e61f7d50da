#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "upsilon/upsilon.hpp"

namespace upsilon {

// Logarithm of the monodromy around the discriminant component of an edge,
// acting on HH(G) (identified with the first cohomology of a smooth fiber).
struct NilpotentOperator {
  std::string edge;
  IntMatrix matrix;
  std::size_t rank = 0;
};

// Built as the composition HH -> H_1 -> Z -> H^1 -> HH: theta |-> <theta, e>, 1 |-> [e].
NilpotentOperator log_monodromy(const Multigraph& g, std::string_view edge_id);

struct MonodromyReport {
  struct EdgeEntry {
    std::string edge;
    EdgeKind kind;
    std::size_t rank;
    bool square_zero;
    bool matches_d_prime;
  };
  std::vector<EdgeEntry> edges;
  bool products_zero = true;   // N_e N_f = 0 for all pairs
  bool bridge_iff_zero = true;  // N_e = 0 exactly for bridges, rank 1 otherwise
  bool ok() const;
};

MonodromyReport verify_relations(const Multigraph& g);

}  // namespace upsilon
