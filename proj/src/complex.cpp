#include <algorithm>
#include <memory>

#include "upsilon/upsilon.hpp"

namespace upsilon {

namespace {

constexpr std::size_t kMaxComplexEdges = 24;

// Order on subsets: by size, then lexicographically on sorted index tuples.
bool subset_less(EdgeMask a, EdgeMask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  if (a == b) return false;
  const EdgeMask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

class WedgeCache {
 public:
  const WedgeBasis& get(unsigned n, unsigned l) {
    auto key = std::pair{n, l};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, std::make_unique<WedgeBasis>(n, l)).first;
    return *it->second;
  }

 private:
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<WedgeBasis>> cache_;
};

}  // namespace

UpsilonComplex::UpsilonComplex(const Multigraph& g) : graph_(g) {
  require_connected(g, "build_complex");
  if (g.num_edges() > kMaxComplexEdges) throw GraphError("build_complex: at most 24 edges are supported");
  const EdgeMask all = g.all_edges();

  std::vector<EdgeMask> admissible;
  for (EdgeMask J = 0;; ++J) {
    if (g.is_connected(all & ~J)) admissible.push_back(J);
    if (J == all) break;
  }
  std::sort(admissible.begin(), admissible.end(), subset_less);
  for (EdgeMask J : admissible) {
    summand_index_[J] = summands_.size();
    summands_.push_back({J, HHSpace(g, all & ~J)});
  }

  // Lay out cells.
  auto& offsets = offsets_;
  offsets.resize(summands_.size());
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    const int k = popcount(summands_[s].removed);
    const unsigned r = summands_[s].space.rank();
    for (unsigned l = 0; l <= r; ++l) {
      const int i = 2 * k + static_cast<int>(l), m = 2 * k + 2 * static_cast<int>(l);
      Cell& c = cells_[{m, i}];
      c.i = i;
      c.m = m;
      offsets[s].push_back(c.dim);
      c.blocks.push_back({s, c.dim});
      c.dim += binomial(r, l);
    }
  }

  WedgeCache wedges;
  for (auto& [key, cell] : cells_) {
    auto target = cells_.find({cell.m, cell.i + 1});
    const Index rows = target == cells_.end() ? 0 : static_cast<Index>(target->second.dim);
    std::vector<Triplet> entries;
    const unsigned l = static_cast<unsigned>(cell.m - cell.i);
    if (rows > 0 && l > 0) {
      for (const CellBlock& blk : cell.blocks) {
        const Summand& src = summands_[blk.summand];
        const EdgeMask alive = src.space.alive();
        const WedgeBasis& from = wedges.get(src.space.rank(), l);
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
          if (!(alive & bit(e)) || edge_kind(g, e, alive) == EdgeKind::bridge) continue;
          const std::size_t t = summand_index_.at(src.removed | bit(e));
          const HHSpace& dst = summands_[t].space;
          const WedgeBasis& to = wedges.get(dst.rank(), l - 1);
          const std::size_t row0 = offsets[t][l - 1];
          DeletionData data = deletion_data(src.space, dst, e);
          for (std::size_t w = 0; w < from.size(); ++w)
            for (auto& [mono, c] : apply_deletion(data, from.monomial(w)))
              entries.push_back({static_cast<Index>(row0 + to.index_of(mono)), static_cast<Index>(blk.offset + w),
                                 std::move(c)});
        }
      }
    }
    cell.d = SparseMatrix::from_triplets(rows, static_cast<Index>(cell.dim), std::move(entries));
  }

  for (const auto& [key, cell] : cells_) {
    auto next = cells_.find({cell.m, cell.i + 1});
    if (next == cells_.end()) continue;
    if (!(next->second.d * cell.d).is_zero())
      throw std::logic_error("build_complex: d^2 != 0 at (i, m) = (" + std::to_string(cell.i) + ", " +
                             std::to_string(cell.m) + ")");
  }
}

std::optional<std::size_t> UpsilonComplex::find_summand(EdgeMask removed) const {
  auto it = summand_index_.find(removed);
  if (it == summand_index_.end()) return std::nullopt;
  return it->second;
}

const Cell* UpsilonComplex::cell(int i, int m) const {
  auto it = cells_.find({m, i});
  return it == cells_.end() ? nullptr : &it->second;
}

std::size_t UpsilonComplex::dimension(int i, int m) const {
  const Cell* c = cell(i, m);
  return c ? c->dim : 0;
}

std::size_t UpsilonComplex::total_dimension() const {
  std::size_t n = 0;
  for (const auto& [key, c] : cells_) n += c.dim;
  return n;
}

SparseMatrix UpsilonComplex::differential(int i, int m) const {
  const Cell* c = cell(i, m);
  if (c) return c->d;
  return SparseMatrix(static_cast<Index>(dimension(i + 1, m)), 0);
}

std::optional<std::size_t> UpsilonComplex::block_offset(std::size_t s, unsigned l) const {
  if (l >= offsets_.at(s).size()) return std::nullopt;
  return offsets_[s][l];
}

UpsilonComplex build_complex(const Multigraph& g) { return UpsilonComplex(g); }

}  // namespace upsilon
