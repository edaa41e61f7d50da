#include <algorithm>

#include "upsilon/upsilon.hpp"

namespace upsilon {

Subspace Filtration::step(int i, int k) const {
  auto it = steps_.find(i);
  if (it == steps_.end()) return Subspace(0);
  const auto& chain = it->second;
  const std::size_t n = chain.back().ambient();
  if (k < 0) return Subspace(n);
  if (static_cast<std::size_t>(k) >= chain.size()) return chain.back();
  return chain[k];
}

std::size_t Filtration::dim(int i, int k) const { return step(i, k).dim(); }

std::size_t Filtration::total(int i) const {
  auto it = steps_.find(i);
  return it == steps_.end() ? 0 : it->second.back().ambient();
}

std::vector<Filtration::Entry> Filtration::table() const {
  std::vector<Entry> t;
  for (const auto& [i, chain] : steps_) {
    if (chain.back().ambient() == 0) continue;
    for (std::size_t k = 0; k < chain.size(); ++k) t.push_back({i, static_cast<int>(k), chain[k].dim()});
  }
  return t;
}

namespace {

Filtration grading_from_weights(const std::map<int, std::vector<int>>& weights) {
  std::map<int, std::vector<Subspace>> steps;
  for (const auto& [i, w] : weights) {
    std::vector<Subspace> chain;
    for (int k = 0; k <= i; ++k) {
      Subspace s(w.size());
      for (std::size_t c = 0; c < w.size(); ++c)
        if (w[c] <= 2 * k) {
          std::vector<Rational> e(w.size());
          e[c] = 1;
          s.add(std::move(e));
        }
      chain.push_back(std::move(s));
    }
    steps[i] = std::move(chain);
  }
  return Filtration(std::move(steps));
}

}  // namespace

Filtration grading_filtration(const BigradedCohomology& bc) {
  std::map<int, std::vector<int>> weights;
  for (const auto& [key, r] : bc.ranks) weights[key.first].insert(weights[key.first].end(), r, key.second);
  return grading_from_weights(weights);
}

Filtration grading_filtration(const CohomologyBasis& basis) {
  std::map<int, std::vector<int>> weights;
  for (int i = 0; i <= basis.max_degree(); ++i) weights[i] = basis.weights(i);
  return grading_from_weights(weights);
}

std::map<int, RatMatrix> deletion_image(const CohomologyBasis& source, const CohomologyBasis& target, EdgeMask K) {
  const UpsilonComplex& sc = source.complex();
  const UpsilonComplex& tc = target.complex();
  const Multigraph& g = tc.graph();
  const int k = popcount(K);
  std::vector<std::size_t> to_parent;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!(K & bit(e))) to_parent.push_back(e);
  if (to_parent.size() != sc.graph().num_edges()) throw std::logic_error("deletion_image: graph mismatch");
  auto lift_mask = [&](EdgeMask j) {
    EdgeMask out = K;
    for (std::size_t e = 0; e < to_parent.size(); ++e)
      if (j & bit(e)) out |= bit(to_parent[e]);
    return out;
  };

  std::map<int, RatMatrix> out;
  for (int i = 0; i <= source.max_degree(); ++i) {
    const std::size_t cols = source.dim(i);
    const int ti = i + 2 * k;
    RatMatrix M(target.dim(ti), cols);
    for (const auto& [key, cell] : sc.cells()) {
      if (cell.i != i) continue;
      const CellCohomology* sh = source.cell(i, cell.m);
      if (!sh || sh->rank() == 0) continue;
      const int tm = cell.m + 2 * k;
      const CellCohomology* th = target.cell(ti, tm);
      const Cell* tcell = tc.cell(ti, tm);
      if (!th || !tcell) throw std::logic_error("deletion_image: missing target cell");
      // Block translation table.
      const unsigned l = static_cast<unsigned>(cell.m - cell.i);
      std::vector<std::pair<std::size_t, std::size_t>> shift;  // (source offset, target offset)
      for (const auto& blk : cell.blocks) {
        const std::size_t t = tc.find_summand(lift_mask(sc.summands()[blk.summand].removed)).value();
        shift.emplace_back(blk.offset, tc.block_offset(t, l).value());
      }
      const std::size_t col0 = source.offset(i, cell.m), row0 = target.offset(ti, tm);
      for (std::size_t r = 0; r < sh->rank(); ++r) {
        SparseVector v;
        for (const auto& [idx, x] : sh->representatives()[r]) {
          auto it = std::upper_bound(shift.begin(), shift.end(), std::pair<std::size_t, std::size_t>{idx, SIZE_MAX}) - 1;
          v.emplace_back(static_cast<Index>(it->second + (idx - it->first)), x);
        }
        auto coords = th->coordinates(canonical(std::move(v)));
        for (std::size_t j = 0; j < coords.size(); ++j) M(row0 + j, col0 + r) = coords[j];
      }
    }
    out.emplace(i, std::move(M));
  }
  return out;
}

Filtration deletion_filtration(const CohomologyBasis& basis) {
  const UpsilonComplex& c = basis.complex();
  const Multigraph& g = c.graph();
  const int top = basis.max_degree();
  std::map<int, std::vector<Subspace>> steps;
  for (int i = 0; i <= top; ++i) {
    const std::size_t n = basis.dim(i);
    std::vector<Subspace> chain(static_cast<std::size_t>(i), Subspace(n));
    chain.push_back(Subspace::whole(n));
    steps[i] = std::move(chain);
  }
  EdgeMask loops = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).is_loop()) loops |= bit(e);
  const EdgeMask all = g.all_edges();
  for (EdgeMask K = 1; K <= all && K != 0; ++K) {
    if ((K & ~all) || (K & loops) || !g.is_connected(all & ~K)) continue;
    const int k = popcount(K);
    UpsilonComplex sub(delete_edges(g, K));
    CohomologyBasis sub_basis(sub);
    for (auto& [si, M] : deletion_image(sub_basis, basis, K)) {
      const int i = si + 2 * k;
      if (i > top || M.cols() == 0) continue;
      Subspace& D = steps[i][static_cast<std::size_t>(i - k)];
      for (std::size_t col = 0; col < M.cols(); ++col) D.add(M.column(col));
    }
  }
  return Filtration(std::move(steps));
}

Filtration deletion_filtration(const Multigraph& g) {
  UpsilonComplex c(g);
  CohomologyBasis basis(c);
  return deletion_filtration(basis);
}

}  // namespace upsilon
