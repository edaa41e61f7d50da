#pragma once

#include <cstdint>
#include <vector>

#include "upsilon/numeric.hpp"

namespace upsilon {

// A wedge monomial x_{s1} ^ ... ^ x_{sl} (s1 < ... < sl) as a bitmask.
using Monomial = std::uint32_t;

std::uint64_t binomial(unsigned n, unsigned k);

// Monomials of degree l in n generators, in lexicographic order of their
// sorted index tuples.
class WedgeBasis {
 public:
  WedgeBasis(unsigned n, unsigned l);
  unsigned generators() const { return n_; }
  unsigned degree() const { return l_; }
  std::size_t size() const { return monomials_.size(); }
  Monomial monomial(std::size_t i) const { return monomials_[i]; }
  std::size_t index_of(Monomial m) const;

 private:
  unsigned n_, l_;
  std::vector<Monomial> monomials_;
};

// Linear combination of monomials, kept sorted by monomial bits.
using WedgeVector = std::vector<std::pair<Monomial, Integer>>;

// Wedge product of vectors v_1 ^ ... ^ v_l of the underlying module, each
// given as sparse coordinates (generator, coefficient).
WedgeVector wedge(const std::vector<std::vector<std::pair<unsigned, Integer>>>& factors);

// Sign of moving generator j into sorted position within monomial m (j not in m):
// x_m ^ x_j = (-1)^{#{s in m : s > j}} x_{m+j}.
inline int insertion_sign(Monomial m, unsigned j) {
  return (__builtin_popcount(m >> (j + 1)) & 1) ? -1 : 1;
}

}  // namespace upsilon
