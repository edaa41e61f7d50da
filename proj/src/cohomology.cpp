#include <algorithm>

#include "upsilon/upsilon.hpp"

namespace upsilon {

std::size_t BigradedCohomology::rank(int i, int m) const {
  auto it = ranks.find({i, m});
  return it == ranks.end() ? 0 : it->second;
}

std::map<int, std::size_t> BigradedCohomology::betti() const {
  std::map<int, std::size_t> b;
  for (const auto& [key, r] : ranks) b[key.first] += r;
  return b;
}

Integer BigradedCohomology::euler_characteristic() const {
  Integer chi = 0;
  for (const auto& [key, r] : ranks) {
    if (key.first % 2 == 0)
      chi += static_cast<unsigned long>(r);
    else
      chi -= static_cast<unsigned long>(r);
  }
  return chi;
}

BigradedCohomology cohomology(const UpsilonComplex& c, bool with_torsion) {
  BigradedCohomology bc;
  bc.has_torsion_data = with_torsion;
  std::map<std::pair<int, int>, std::size_t> out_rank;  // key (i, m)
  for (const auto& [key, cell] : c.cells()) out_rank[{cell.i, cell.m}] = sparse_rank(cell.d);
  for (const auto& [key, cell] : c.cells()) {
    std::size_t in = 0;
    if (const Cell* prev = c.cell(cell.i - 1, cell.m)) {
      in = out_rank.at({cell.i - 1, cell.m});
      if (with_torsion) {
        std::vector<Integer> t;
        for (auto& d : elementary_divisors(prev->d))
          if (d != 1) t.push_back(std::move(d));
        if (!t.empty()) bc.torsion[{cell.i, cell.m}] = std::move(t);
      }
    }
    bc.ranks[{cell.i, cell.m}] = cell.dim - out_rank.at({cell.i, cell.m}) - in;
  }
  return bc;
}

CellCohomology::CellCohomology(const UpsilonComplex& c, int i, int m)
    : dim_(static_cast<Index>(c.dimension(i, m))), echelon_(dim_) {
  if (const Cell* prev = c.cell(i - 1, m))
    for (Index col = 0; col < prev->d.cols(); ++col) echelon_.insert(prev->d.column(col));
  cocycles_ = sparse_kernel_basis(c.differential(i, m));
  for (const auto& z : cocycles_) {
    SparseVector tagged = z;
    tagged.emplace_back(dim_ + static_cast<Index>(reps_.size()), 1);
    if (echelon_.insert(std::move(tagged))) reps_.push_back(z);
  }
}

std::vector<Rational> CellCohomology::coordinates(const SparseVector& v) const {
  Integer scale = 1;
  SparseVector r = echelon_.reduce(v, &scale);
  std::vector<Rational> out(reps_.size());
  for (const auto& [idx, x] : r) {
    if (idx < dim_) throw std::logic_error("coordinates: vector is not a cocycle");
    out[idx - dim_] = Rational(-x, scale);
    out[idx - dim_].canonicalize();
  }
  return out;
}

CohomologyBasis::CohomologyBasis(const UpsilonComplex& c) : complex_(&c) {
  for (const auto& [key, cell] : c.cells()) {
    cells_.emplace(std::pair{cell.i, cell.m}, CellCohomology(c, cell.i, cell.m));
    max_degree_ = std::max(max_degree_, cell.i);
  }
}

const CellCohomology* CohomologyBasis::cell(int i, int m) const {
  auto it = cells_.find({i, m});
  return it == cells_.end() ? nullptr : &it->second;
}

std::size_t CohomologyBasis::dim(int i) const {
  std::size_t n = 0;
  for (auto it = cells_.lower_bound({i, -1}); it != cells_.end() && it->first.first == i; ++it)
    n += it->second.rank();
  return n;
}

std::size_t CohomologyBasis::offset(int i, int m) const {
  std::size_t n = 0;
  for (auto it = cells_.lower_bound({i, -1}); it != cells_.end() && it->first.first == i && it->first.second < m; ++it)
    n += it->second.rank();
  return n;
}

std::vector<int> CohomologyBasis::weights(int i) const {
  std::vector<int> w;
  for (auto it = cells_.lower_bound({i, -1}); it != cells_.end() && it->first.first == i; ++it)
    w.insert(w.end(), it->second.rank(), it->first.second);
  return w;
}

}  // namespace upsilon
