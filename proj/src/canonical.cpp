#include <algorithm>
#include <map>
#include <numeric>

#include "upsilon/graph.hpp"

namespace upsilon {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;  // symmetric edge multiplicities, loops on the diagonal

std::string encode(const Adjacency& a, const std::vector<std::size_t>& order) {
  std::string key = std::to_string(order.size()) + ":";
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i; j < order.size(); ++j) key += std::to_string(a[order[i]][order[j]]) + ",";
  return key;
}

// Color refinement; returns vertex colors whose numbering is isomorphism-invariant.
std::vector<std::size_t> refine(const Adjacency& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 0;
  for (bool first = true;; first = false) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      sig[v].push_back(a[v][v]);
      std::vector<std::pair<std::size_t, std::size_t>> nb;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && a[v][w]) nb.emplace_back(color[w], a[v][w]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (!first && next == classes) break;
    classes = next;
  }
  return color;
}

}  // namespace

std::optional<std::string> canonical_key(const Multigraph& g, std::size_t budget) {
  const std::size_t n = g.num_vertices();
  Adjacency a(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      ++a[e.tail][e.tail];
    } else {
      ++a[e.tail][e.head];
      ++a[e.head][e.tail];
    }
  }
  const auto color = refine(a);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return color[x] < color[y]; });
  // Cells of equal color; permute within each cell.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::size_t labelings = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    for (std::size_t k = 2; k <= j - i; ++k) {
      labelings *= k;
      if (labelings > budget) return std::nullopt;
    }
    i = j;
  }
  std::string best;
  bool have = false;
  // Odometer over the product of per-cell permutations.
  while (true) {
    std::string key = encode(a, order);
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;  // wrapped cells are back in sorted order
    }
    if (c == cells.size()) break;
  }
  return best;
}

}  // namespace upsilon
