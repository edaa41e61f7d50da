#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "upsilon/graph.hpp"
#include "upsilon/numeric.hpp"

namespace upsilon {

bool is_prime(std::uint64_t n);

// Moment-map value over F_q: one unit per vertex, product 1.
struct FqEta {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> values;
  friend bool operator==(const FqEta&, const FqEta&) = default;
};

struct PointCountError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws PointCountError unless q is prime, there is one unit per vertex and their product is 1.
void validate_eta(const Multigraph& g, const FqEta& eta);

// Result of scanning all a in (F_q^*)^E with vertex products
// prod_{exiting} a_e / prod_{entering} a_e = eta_v.
struct GenericityCertificate {
  bool generic = true;
  std::uint64_t chains_checked = 0;
  std::vector<std::uint64_t> witness;  // a chain leaving G \ {e : a_e = 1} disconnected
};
GenericityCertificate certify_generic(const Multigraph& g, const FqEta& eta);

// False iff some such a leaves G \ {e : a_e = 1} disconnected.
bool is_generic(const Multigraph& g, const FqEta& eta);

// First generic eta in lexicographic order of (eta_0, ..., eta_{n-2}), the last value
// fixed by the product condition. Throws PointCountError if none exists.
FqEta find_generic_eta(const Multigraph& g, std::uint64_t q);

struct CountOptions {
  // Largest admissible number of enumerated tuples q^{2|E|}.
  std::uint64_t ceiling = 100000000;
  // 0: read UPSILON_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
};

// Number of F_q-points of the multiplicative hypertoric variety: solutions
// (x_e, y_e) with 1 + x_e y_e != 0 of the vertex equations, divided by (q-1)^{|V|-1}.
// Throws PointCountError if eta is not generic, the division is inexact, or
// the instance exceeds the ceiling.
Integer count_points(const Multigraph& g, const FqEta& eta, const CountOptions& options = {});

unsigned thread_count(unsigned requested);

}  // namespace upsilon
