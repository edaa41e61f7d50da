#include "upsilon/exterior.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace upsilon {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

WedgeBasis::WedgeBasis(unsigned n, unsigned l) : n_(n), l_(l) {
  if (n > 32) throw std::invalid_argument("WedgeBasis supports at most 32 generators");
  if (l > n) return;
  // Lexicographic enumeration of l-subsets of {0..n-1}.
  std::vector<unsigned> c(l);
  for (unsigned i = 0; i < l; ++i) c[i] = i;
  while (true) {
    Monomial m = 0;
    for (unsigned x : c) m |= Monomial{1} << x;
    monomials_.push_back(m);
    int i = static_cast<int>(l) - 1;
    while (i >= 0 && c[i] == n - l + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++c[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < l; ++j) c[j] = c[j - 1] + 1;
  }
}

std::size_t WedgeBasis::index_of(Monomial m) const {
  if (static_cast<unsigned>(__builtin_popcount(m)) != l_ || (n_ < 32 && (m >> n_)))
    throw std::out_of_range("monomial not in this wedge basis");
  // Rank of the subset in lexicographic order.
  std::size_t rank = 0;
  unsigned prev = 0, i = 0;
  for (unsigned x = 0; x < n_; ++x) {
    if (!(m >> x & 1)) continue;
    for (unsigned j = prev; j < x; ++j) rank += binomial(n_ - 1 - j, l_ - 1 - i);
    prev = x + 1;
    ++i;
  }
  return rank;
}

WedgeVector wedge(const std::vector<std::vector<std::pair<unsigned, Integer>>>& factors) {
  std::map<Monomial, Integer> acc{{0, Integer(1)}};
  for (const auto& f : factors) {
    std::map<Monomial, Integer> next;
    for (const auto& [m, c] : acc)
      for (const auto& [j, x] : f) {
        if (m >> j & 1) continue;
        Integer v = c * x;
        if (insertion_sign(m, j) < 0) v = -v;
        next[m | (Monomial{1} << j)] += v;
      }
    acc.clear();
    for (auto& [m, c] : next)
      if (c != 0) acc.emplace(m, std::move(c));
    if (acc.empty()) break;
  }
  return WedgeVector(acc.begin(), acc.end());
}

}  // namespace upsilon
