#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "upsilon/exterior.hpp"

using namespace upsilon;

namespace {

// Sign of the permutation sorting `v` (distinct entries), by counting inversions.
int permutation_sign(const std::vector<unsigned>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
  return inv % 2 ? -1 : 1;
}

// Coefficient of x_S in v_1 ^ ... ^ v_l is det of the rows S of the l x l coordinate matrix,
// computed here by the Leibniz permutation sum.
Integer minor_coefficient(const std::vector<std::vector<Integer>>& dense, const std::vector<unsigned>& rows) {
  std::vector<unsigned> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0u);
  Integer total = 0;
  do {
    Integer term = permutation_sign(perm);
    for (std::size_t k = 0; k < rows.size(); ++k) term *= dense[k][rows[perm[k]]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("wedge basis is lexicographic") {
  WedgeBasis b(4, 2);
  REQUIRE(b.size() == 6);
  const std::vector<Monomial> expected{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(b.monomial(i) == expected[i]);
    CHECK(b.index_of(expected[i]) == i);
  }
  CHECK(WedgeBasis(5, 0).size() == 1);
  CHECK(WedgeBasis(3, 4).size() == 0);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned l = 0; l <= n; ++l) CHECK(WedgeBasis(n, l).size() == binomial(n, l));
}

TEST_CASE("insertion sign") {
  CHECK(insertion_sign(0b000, 0) == 1);
  CHECK(insertion_sign(0b010, 0) == -1);  // x1 ^ x0 = -x0 ^ x1
  CHECK(insertion_sign(0b001, 1) == 1);
  CHECK(insertion_sign(0b110, 0) == 1);
  for (Monomial m = 0; m < 64; ++m)
    for (unsigned j = 0; j < 6; ++j) {
      if (m >> j & 1) continue;
      std::vector<unsigned> order;
      for (unsigned s = 0; s < 6; ++s)
        if (m >> s & 1) order.push_back(s);
      order.push_back(j);
      CHECK(insertion_sign(m, j) == permutation_sign(order));
    }
}

TEST_CASE("wedge agrees with minors") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + rng() % 6, l = rng() % (n + 1);
    std::vector<std::vector<std::pair<unsigned, Integer>>> factors(l);
    std::vector<std::vector<Integer>> dense(l, std::vector<Integer>(n));
    for (unsigned k = 0; k < l; ++k)
      for (unsigned g = 0; g < n; ++g)
        if (int x = val(rng)) {
          factors[k].push_back({g, Integer(x)});
          dense[k][g] = x;
        }
    const WedgeVector w = wedge(factors);
    WedgeBasis basis(n, l);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<unsigned> rows;
      for (unsigned g = 0; g < n; ++g)
        if (basis.monomial(i) >> g & 1) rows.push_back(g);
      Integer got = 0;
      for (const auto& [m, c] : w)
        if (m == basis.monomial(i)) got = c;
      CHECK(got == minor_coefficient(dense, rows));
    }
    for (const auto& [m, c] : w) CHECK(c != 0);
    CHECK(std::is_sorted(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; }));
  }
}
