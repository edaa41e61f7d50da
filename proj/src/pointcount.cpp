#include "upsilon/pointcount.hpp"

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

namespace upsilon {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 q) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q); }

u64 pow_mod(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mul_mod(r, a, q);
    a = mul_mod(a, a, q);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 q) { return pow_mod(a, q - 2, q); }

// Vertex-by-edge signed incidence for the vertex equations: +1 exiting, -1 entering.
struct Incidence {
  std::size_t vertices;
  std::vector<std::size_t> tail, head;
  std::vector<bool> loop;
};

Incidence incidence(const Multigraph& g) {
  Incidence inc{g.num_vertices(), {}, {}, {}};
  for (const auto& e : g.edges()) {
    inc.tail.push_back(e.tail);
    inc.head.push_back(e.head);
    inc.loop.push_back(e.is_loop());
  }
  return inc;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_eta(const Multigraph& g, const FqEta& eta) {
  if (!is_prime(eta.q)) throw PointCountError("q = " + std::to_string(eta.q) + " is not prime");
  if (eta.values.size() != g.num_vertices())
    throw PointCountError("eta needs one value per vertex (" + std::to_string(g.num_vertices()) + ")");
  u64 prod = 1;
  for (u64 v : eta.values) {
    if (v == 0 || v >= eta.q) throw PointCountError("eta values must be units of F_q written in 1..q-1");
    prod = mul_mod(prod, v, eta.q);
  }
  if (prod != 1) throw PointCountError("eta values must multiply to 1");
}

GenericityCertificate certify_generic(const Multigraph& g, const FqEta& eta) {
  validate_eta(g, eta);
  require_connected(g, "is_generic");
  GenericityCertificate cert;
  const u64 q = eta.q;
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  const EdgeMask tree = greedy_spanning_tree(g, g.all_edges());

  // Peel the spanning tree from the leaves: order vertices by BFS from 0 and
  // remember each vertex's parent edge.
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e = 0; e < m; ++e)
    if (tree & bit(e)) {
      adj[g.edge(e).tail].push_back(e);
      adj[g.edge(e).head].push_back(e);
    }
  std::vector<std::size_t> order{0}, parent_edge(n, SIZE_MAX);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t e : adj[order[k]]) {
      const std::size_t w = g.edge(e).tail == order[k] ? g.edge(e).head : g.edge(e).tail;
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }

  std::vector<std::size_t> free_edges;
  for (std::size_t e = 0; e < m; ++e)
    if (!(tree & bit(e))) free_edges.push_back(e);

  std::vector<u64> a(m, 1);
  std::vector<std::size_t> odometer(free_edges.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free_edges.size(); ++k) a[free_edges[k]] = odometer[k] + 1;
    // Solve tree edges from the leaves inward.
    std::vector<u64> acc(n, 1);  // product of known contributions at each vertex
    for (std::size_t e = 0; e < m; ++e) {
      if (tree & bit(e)) continue;
      const auto& ed = g.edge(e);
      if (ed.is_loop()) continue;
      acc[ed.tail] = mul_mod(acc[ed.tail], a[e], q);
      acc[ed.head] = mul_mod(acc[ed.head], inv_mod(a[e], q), q);
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const std::size_t v = order[k], t = parent_edge[v];
      const auto& ed = g.edge(t);
      const u64 eta_v = eta.values[v];
      // Exiting: a_t * acc = eta; entering: acc / a_t = eta.
      a[t] = ed.tail == v ? mul_mod(eta_v, inv_mod(acc[v], q), q) : mul_mod(acc[v], inv_mod(eta_v, q), q);
      const std::size_t w = ed.tail == v ? ed.head : ed.tail;
      acc[w] = mul_mod(acc[w], ed.tail == w ? a[t] : inv_mod(a[t], q), q);
      acc[v] = eta_v;
    }
    EdgeMask alive = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (a[e] != 1) alive |= bit(e);
    ++cert.chains_checked;
    if (!g.is_connected(alive)) {
      cert.generic = false;
      cert.witness = a;
      return cert;
    }

    std::size_t k = 0;
    while (k < odometer.size() && ++odometer[k] == q - 1) odometer[k++] = 0;
    if (k == odometer.size()) break;
  }
  return cert;
}

bool is_generic(const Multigraph& g, const FqEta& eta) { return certify_generic(g, eta).generic; }

FqEta find_generic_eta(const Multigraph& g, std::uint64_t q) {
  if (!is_prime(q)) throw PointCountError("q = " + std::to_string(q) + " is not prime");
  require_connected(g, "find_generic_eta");
  const std::size_t n = g.num_vertices();
  std::vector<u64> head(n - 1, 1);
  while (true) {
    u64 prod = 1;
    for (u64 v : head) prod = mul_mod(prod, v, q);
    FqEta eta{q, head};
    eta.values.push_back(inv_mod(prod, q));
    if (is_generic(g, eta)) return eta;
    std::size_t k = head.size();
    while (k > 0 && head[k - 1] == q - 1) head[--k] = 1;
    if (k == 0) break;
    ++head[k - 1];
  }
  throw PointCountError("no generic eta exists over F_" + std::to_string(q) + "; q is too small for this graph");
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("UPSILON_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Integer count_points(const Multigraph& g, const FqEta& eta, const CountOptions& options) {
  validate_eta(g, eta);
  require_connected(g, "count_points");
  const u64 q = eta.q;
  const std::size_t m = g.num_edges(), n = g.num_vertices();
  {
    long double size = 1;
    for (std::size_t k = 0; k < 2 * m; ++k) size *= static_cast<long double>(q);
    if (size > static_cast<long double>(options.ceiling))
      throw PointCountError("instance too large: q^(2|E|) = " + std::to_string(q) + "^" + std::to_string(2 * m) +
                            " exceeds the enumeration ceiling " + std::to_string(options.ceiling));
  }
  if (!is_generic(g, eta)) throw PointCountError("eta is not generic");
  const Incidence inc = incidence(g);

  // Depth-first enumeration of (x_e, y_e) edge by edge, tracking vertex products.
  auto enumerate = [&](std::size_t first_value) -> u64 {
    std::vector<u64> prod(n, 1);
    u64 count = 0;
    auto apply = [&](std::size_t e, u64 a) {
      if (inc.loop[e]) return;
      prod[inc.tail[e]] = mul_mod(prod[inc.tail[e]], a, q);
      prod[inc.head[e]] = mul_mod(prod[inc.head[e]], inv_mod(a, q), q);
    };
    auto unapply = [&](std::size_t e, u64 a) { apply(e, inv_mod(a, q)); };
    std::function<void(std::size_t)> rec = [&](std::size_t e) {
      if (e == m) {
        for (std::size_t v = 0; v < n; ++v)
          if (prod[v] != eta.values[v]) return;
        ++count;
        return;
      }
      const u64 lo = e == 0 ? first_value : 0, hi = e == 0 ? first_value + 1 : q * q;
      for (u64 xy = lo; xy < hi; ++xy) {
        const u64 a = (1 + mul_mod(xy / q, xy % q, q)) % q;
        if (a == 0) continue;
        apply(e, a);
        rec(e + 1);
        unapply(e, a);
      }
    };
    rec(0);
    return count;
  };

  u64 total = 0;
  if (m == 0) {
    total = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (eta.values[v] != 1) total = 0;
  } else {
    const u64 jobs = q * q;
    const unsigned threads = static_cast<unsigned>(std::min<u64>(thread_count(options.threads), jobs));
    std::vector<u64> partial(jobs, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (u64 j = t; j < jobs; j += threads) partial[j] = enumerate(j);
      });
    for (auto& th : pool) th.join();
    for (u64 p : partial) total += p;
  }

  Integer numerator(static_cast<unsigned long>(total));
  Integer divisor = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) divisor *= static_cast<unsigned long>(q - 1);
  if (numerator % divisor != 0)
    throw PointCountError("solution count " + numerator.get_str() + " is not divisible by (q-1)^(|V|-1) = " +
                          divisor.get_str());
  return numerator / divisor;
}

}  // namespace upsilon
