#pragma once

#include <cstdint>
#include <vector>

#include "upsilon/motive.hpp"

namespace upsilon {

struct SuiteOptions {
  std::vector<std::uint64_t> q;      // primes for point-count checks
  std::size_t les_max_edges = 8;     // skip deletion-contraction sequences above this size
  std::size_t motive_max_edges = 16; // skip the recursive motive pipelines above this size
  CountOptions count;
};

// Every invariant the library can verify on a single graph, as named checks.
std::vector<Check> invariant_suite(const Multigraph& g, const SuiteOptions& options = {});

// Outputs compared by the orientation and relabeling checks.
struct Fingerprint {
  std::map<std::pair<int, int>, std::size_t> ranks;
  std::vector<Filtration::Entry> deletion, grading;
  IntPolynomial motive;
  BiPolynomial tutte;
  std::vector<std::size_t> monodromy_ranks;  // sorted
  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
};
Fingerprint fingerprint(const Multigraph& g);

bool operator==(const Filtration::Entry& a, const Filtration::Entry& b);

}  // namespace upsilon
