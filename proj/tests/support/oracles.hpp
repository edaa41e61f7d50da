#pragma once

// Brute-force reference computations used to check the library. They share no
// code with the library beyond the Multigraph container.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "upsilon/graph.hpp"

namespace upsilon::testing {

// Union-find component count of (V, subset).
inline std::size_t oracle_components(const Multigraph& g, std::uint64_t subset) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.num_vertices();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!(subset >> e & 1)) continue;
    const std::size_t a = find(g.edge(e).tail), b = find(g.edge(e).head);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

inline long oracle_rank(const Multigraph& g, std::uint64_t subset) {
  return static_cast<long>(g.num_vertices() - oracle_components(g, subset));
}

// Polynomials as ascending coefficient vectors of long.
using Poly = std::vector<long>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly p(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  return p;
}
inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
inline Poly poly_pow(const Poly& a, unsigned n) {
  Poly p{1};
  for (unsigned i = 0; i < n; ++i) p = poly_mul(p, a);
  return p;
}

// Sum over all 2^|E| subsets, keeping the connected spanning ones.
inline Poly oracle_motive(const Multigraph& g) {
  const long b1 = static_cast<long>(g.num_edges()) - oracle_rank(g, (std::uint64_t{1} << g.num_edges()) - 1);
  Poly total;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_edges()); ++s) {
    if (oracle_components(g, s) != 1) continue;
    const long b = __builtin_popcountll(s) - oracle_rank(g, s);
    Poly term = poly_mul(poly_pow({-1, 1}, static_cast<unsigned>(2 * b)), poly_pow({0, 1}, static_cast<unsigned>(b1 - b)));
    total = poly_add(total, term);
  }
  return total;
}

// Whitney rank expansion T(x, y) = sum (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}, as (a, b) -> coefficient of x^a y^b.
inline std::map<std::pair<unsigned, unsigned>, long> oracle_tutte(const Multigraph& g) {
  const std::uint64_t all = (std::uint64_t{1} << g.num_edges()) - 1;
  const long rE = oracle_rank(g, all);
  std::map<std::pair<unsigned, unsigned>, long> t;
  auto binom = [](unsigned n, unsigned k) {
    long r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (std::uint64_t s = 0; s <= all; ++s) {
    const unsigned p = static_cast<unsigned>(rE - oracle_rank(g, s));
    const unsigned q = static_cast<unsigned>(__builtin_popcountll(s) - oracle_rank(g, s));
    for (unsigned a = 0; a <= p; ++a)
      for (unsigned b = 0; b <= q; ++b) {
        const long sign = ((p - a) + (q - b)) % 2 ? -1 : 1;
        t[{a, b}] += sign * binom(p, a) * binom(q, b);
      }
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

// Number of spanning trees by enumerating (|V|-1)-subsets.
inline long oracle_spanning_trees(const Multigraph& g) {
  long count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_edges()); ++s)
    if (static_cast<std::size_t>(__builtin_popcountll(s)) + 1 == g.num_vertices() && oracle_components(g, s) == 1)
      ++count;
  return count;
}

inline long powmod(long b, long e, long q) {
  long r = 1;
  b %= q;
  for (; e; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r;
}

// Direct enumeration of a in (F_q^*)^E with vertex products eta; genericity as the absence of a
// chain with G \ {e : a_e = 1} disconnected.
inline bool oracle_generic(const Multigraph& g, long q, const std::vector<long>& eta) {
  const std::size_t m = g.num_edges();
  std::vector<long> a(m, 1);
  while (true) {
    std::vector<long> prod(g.num_vertices(), 1);
    for (std::size_t e = 0; e < m; ++e) {
      prod[g.edge(e).tail] = prod[g.edge(e).tail] * a[e] % q;
      prod[g.edge(e).head] = prod[g.edge(e).head] * powmod(a[e], q - 2, q) % q;
    }
    if (prod == std::vector<long>(eta.begin(), eta.end())) {
      std::uint64_t keep = 0;
      for (std::size_t e = 0; e < m; ++e)
        if (a[e] != 1) keep |= std::uint64_t{1} << e;
      if (oracle_components(g, keep) != 1) return false;
    }
    std::size_t k = 0;
    while (k < m && ++a[k] == q) a[k++] = 1;
    if (k == m) return true;
  }
}

// Direct enumeration of (x, y) in F_q^{2E} with 1 + xy != 0 satisfying the vertex equations,
// divided by (q-1)^{|V|-1}. Returns -1 if the division is inexact.
inline long oracle_count(const Multigraph& g, long q, const std::vector<long>& eta) {
  const std::size_t m = g.num_edges();
  std::vector<long> xy(2 * m, 0);
  long solutions = 0;
  while (true) {
    std::vector<long> prod(g.num_vertices(), 1);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      const long u = (1 + xy[2 * e] * xy[2 * e + 1]) % q;
      if (u == 0) ok = false;
      prod[g.edge(e).tail] = prod[g.edge(e).tail] * u % q;
      prod[g.edge(e).head] = prod[g.edge(e).head] * powmod(u, q - 2, q) % q;
    }
    if (ok && prod == std::vector<long>(eta.begin(), eta.end())) ++solutions;
    std::size_t k = 0;
    while (k < 2 * m && ++xy[k] == q) xy[k++] = 0;
    if (k == 2 * m) break;
  }
  long torus = 1;
  for (std::size_t i = 1; i < g.num_vertices(); ++i) torus *= q - 1;
  return solutions % torus ? -1 : solutions / torus;
}

}  // namespace upsilon::testing
