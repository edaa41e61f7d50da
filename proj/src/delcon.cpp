#include "upsilon/delcon.hpp"

#include <algorithm>

namespace upsilon {

namespace {

using LinearImages = std::vector<std::vector<std::pair<unsigned, Integer>>>;

// Matrix of wedge^l of a linear map given by the images of the generators.
std::vector<Triplet> wedge_power(const LinearImages& images, unsigned n_target, unsigned l, Index row0, Index col0) {
  WedgeBasis from(static_cast<unsigned>(images.size()), l), to(n_target, l);
  std::vector<Triplet> out;
  for (std::size_t w = 0; w < from.size(); ++w) {
    const Monomial s = from.monomial(w);
    std::vector<std::vector<std::pair<unsigned, Integer>>> factors;
    for (unsigned r = 0; r < images.size(); ++r)
      if (s >> r & 1) factors.push_back(images[r]);
    for (auto& [t, c] : wedge(factors))
      out.push_back({static_cast<Index>(row0 + to.index_of(t)), static_cast<Index>(col0 + w), std::move(c)});
  }
  return out;
}

EdgeMask compress_mask(EdgeMask J, std::size_t e) {
  const EdgeMask low = J & (bit(e) - 1);
  return low | ((J >> (e + 1)) << e);
}

std::vector<Integer> compress_vector(const std::vector<std::int64_t>& v, std::size_t e) {
  std::vector<Integer> out;
  out.reserve(v.size() - 1);
  for (std::size_t f = 0; f < v.size(); ++f)
    if (f != e) out.emplace_back(static_cast<long>(v[f]));
  return out;
}

// Cycle transport matrix C (target coords = C * source coords) of the
// homotopy equivalence G\J -> (G/e)\J, and its inverse.
struct Transport {
  IntMatrix C, C_inv;
};

Transport transport(const HHSpace& src, const HHSpace& dst, std::size_t e) {
  const unsigned b = src.b1();
  if (dst.b1() != b) throw std::logic_error("quotient identification: first Betti numbers differ");
  Transport t{IntMatrix(b, b), IntMatrix(b, b)};
  for (unsigned i = 0; i < b; ++i) {
    auto coords = dst.cycle_coordinates(compress_vector(src.cycles()[i].coefficients, e));
    for (unsigned j = 0; j < b; ++j) t.C(j, i) = coords[j];
  }
  auto inv = inverse(to_rational(t.C));
  if (!inv) throw std::logic_error("quotient identification: cycle transport is singular");
  for (unsigned i = 0; i < b; ++i)
    for (unsigned j = 0; j < b; ++j) {
      const Rational& x = (*inv)(i, j);
      if (x.get_den() != 1) throw std::logic_error("quotient identification: cycle transport is not unimodular");
      t.C_inv(i, j) = x.get_num();
    }
  return t;
}

// Images of the basis of HH under cycles -> A * cycles, cochains -> B * cochains.
LinearImages block_images(const IntMatrix& A, const IntMatrix& B) {
  const unsigned b = static_cast<unsigned>(A.rows());
  LinearImages img(2 * b);
  for (unsigned i = 0; i < b; ++i)
    for (unsigned j = 0; j < b; ++j) {
      if (A(j, i) != 0) img[i].emplace_back(j, A(j, i));
      if (B(j, i) != 0) img[b + i].emplace_back(b + j, B(j, i));
    }
  return img;
}

SparseMatrix zero_block(const UpsilonComplex& target, int ti, int tm, const UpsilonComplex& source, int i, int m) {
  return SparseMatrix(static_cast<Index>(target.dimension(ti, tm)), static_cast<Index>(source.dimension(i, m)));
}

std::size_t column_difference(const SparseMatrix& x, const SparseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::logic_error("chain map: shape mismatch");
  std::size_t n = 0;
  for (Index c = 0; c < x.cols(); ++c) n += combine(1, x.column(c), -1, y.column(c)).size();
  return n;
}

std::vector<Rational> rational_coordinates(const CohomologyBasis& basis, int i, int m, const SparseVector& v) {
  const CellCohomology* cell = basis.cell(i, m);
  if (!cell) {
    if (!v.empty()) throw std::logic_error("cohomology map: nonzero image in an empty cell");
    return {};
  }
  return cell->coordinates(v);
}

}  // namespace

SparseMatrix ChainMap::at(int i, int m) const {
  auto it = blocks.find({i, m});
  if (it != blocks.end()) return it->second;
  return zero_block(*target, i + shift, m + shift, *source, i, m);
}

std::size_t ChainMap::commutation_residual() const {
  std::size_t residual = 0;
  for (const auto& [key, cell] : source->cells()) {
    const int i = cell.i, m = cell.m;
    SparseMatrix lhs = target->differential(i + shift, m + shift) * at(i, m);
    SparseMatrix rhs = at(i + 1, m) * source->differential(i, m);
    residual += column_difference(lhs, rhs);
  }
  return residual;
}

ChainMap subcomplex_embedding(const UpsilonComplex& sub, const UpsilonComplex& full, EdgeMask K) {
  const Multigraph& g = full.graph();
  std::vector<std::size_t> to_parent;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!(K & bit(e))) to_parent.push_back(e);
  if (to_parent.size() != sub.graph().num_edges()) throw std::logic_error("subcomplex_embedding: graph mismatch");
  const int k = popcount(K);
  ChainMap f{&sub, &full, 2 * k, {}};
  for (const auto& [key, cell] : sub.cells()) {
    const unsigned l = static_cast<unsigned>(cell.m - cell.i);
    std::vector<Triplet> entries;
    for (const CellBlock& blk : cell.blocks) {
      const Summand& s = sub.summands()[blk.summand];
      EdgeMask lifted = K;
      for (std::size_t e = 0; e < to_parent.size(); ++e)
        if (s.removed & bit(e)) lifted |= bit(to_parent[e]);
      const std::size_t t = full.find_summand(lifted).value();
      const HHSpace& ts = full.summands()[t].space;
      if (ts.b1() != s.space.b1()) throw std::logic_error("subcomplex_embedding: summand mismatch");
      for (unsigned j = 0; j < s.space.b1(); ++j)
        if (to_parent[s.space.cotree()[j]] != ts.cotree()[j])
          throw std::logic_error("subcomplex_embedding: bases do not match");
      const std::size_t row0 = full.block_offset(t, l).value();
      const std::size_t n = binomial(s.space.rank(), l);
      for (std::size_t w = 0; w < n; ++w)
        entries.push_back({static_cast<Index>(row0 + w), static_cast<Index>(blk.offset + w), Integer(1)});
    }
    f.blocks.emplace(std::pair{cell.i, cell.m},
                     SparseMatrix::from_triplets(static_cast<Index>(full.dimension(cell.i + 2 * k, cell.m + 2 * k)),
                                                 static_cast<Index>(cell.dim), std::move(entries)));
  }
  return f;
}

ChainMap quotient_identification(const UpsilonComplex& full, const UpsilonComplex& contracted, std::size_t e) {
  ChainMap f{&full, &contracted, 0, {}};
  for (const auto& [key, cell] : full.cells()) {
    const unsigned l = static_cast<unsigned>(cell.m - cell.i);
    std::vector<Triplet> entries;
    for (const CellBlock& blk : cell.blocks) {
      const Summand& s = full.summands()[blk.summand];
      if (s.removed & bit(e)) continue;
      const std::size_t t = contracted.find_summand(compress_mask(s.removed, e)).value();
      const HHSpace& ts = contracted.summands()[t].space;
      Transport tr = transport(s.space, ts, e);
      // Cochain classes move by the inverse transpose of the cycle transport.
      auto block = wedge_power(block_images(tr.C, tr.C_inv.transpose()), ts.rank(), l,
                               static_cast<Index>(contracted.block_offset(t, l).value()),
                               static_cast<Index>(blk.offset));
      entries.insert(entries.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    f.blocks.emplace(std::pair{cell.i, cell.m},
                     SparseMatrix::from_triplets(static_cast<Index>(contracted.dimension(cell.i, cell.m)),
                                                 static_cast<Index>(cell.dim), std::move(entries)));
  }
  return f;
}

ChainMap quotient_section(const UpsilonComplex& full, const UpsilonComplex& contracted, std::size_t e) {
  std::vector<std::size_t> to_parent;
  for (std::size_t f = 0; f < full.graph().num_edges(); ++f)
    if (f != e) to_parent.push_back(f);
  ChainMap f{&contracted, &full, 0, {}};
  for (const auto& [key, cell] : contracted.cells()) {
    const unsigned l = static_cast<unsigned>(cell.m - cell.i);
    std::vector<Triplet> entries;
    for (const CellBlock& blk : cell.blocks) {
      const Summand& s = contracted.summands()[blk.summand];
      EdgeMask lifted = 0;
      for (std::size_t j = 0; j < to_parent.size(); ++j)
        if (s.removed & bit(j)) lifted |= bit(to_parent[j]);
      const std::size_t t = full.find_summand(lifted).value();
      const HHSpace& ts = full.summands()[t].space;
      Transport tr = transport(ts, s.space, e);
      auto block = wedge_power(block_images(tr.C_inv, tr.C.transpose()), ts.rank(), l,
                               static_cast<Index>(full.block_offset(t, l).value()), static_cast<Index>(blk.offset));
      entries.insert(entries.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    f.blocks.emplace(std::pair{cell.i, cell.m},
                     SparseMatrix::from_triplets(static_cast<Index>(full.dimension(cell.i, cell.m)),
                                                 static_cast<Index>(cell.dim), std::move(entries)));
  }
  return f;
}

LongExactSequence::LongExactSequence(const Multigraph& g, std::string_view edge_id)
    : graph_(g), edge_(edge_id), e_(g.edge_index(edge_id)) {
  require_connected(g, "delcon");
  switch (edge_kind(g, edge_id)) {
    case EdgeKind::loop:
      throw EdgeSelectionError("edge \"" + edge_ + "\" is a loop; deletion-contraction needs an ordinary edge");
    case EdgeKind::bridge:
      throw EdgeSelectionError("edge \"" + edge_ + "\" is a bridge; deletion-contraction needs an ordinary edge");
    case EdgeKind::ordinary:
      break;
  }
  deleted_ = std::make_unique<UpsilonComplex>(delete_edge(g, edge_id));
  whole_ = std::make_unique<UpsilonComplex>(g);
  contracted_ = std::make_unique<UpsilonComplex>(contract_edge(g, edge_id));
  deleted_basis_ = std::make_unique<CohomologyBasis>(*deleted_);
  whole_basis_ = std::make_unique<CohomologyBasis>(*whole_);
  contracted_basis_ = std::make_unique<CohomologyBasis>(*contracted_);

  const ChainMap emb = subcomplex_embedding(*deleted_, *whole_, bit(e_));
  const ChainMap quo = quotient_identification(*whole_, *contracted_, e_);
  const ChainMap sec = quotient_section(*whole_, *contracted_, e_);
  embedding_residual_ = emb.commutation_residual();
  quotient_residual_ = quo.commutation_residual();

  // Cochain-level short exact sequence.
  ses_ = {true, true, true, true};
  for (const auto& [key, cell] : whole_->cells()) {
    const int i = cell.i, m = cell.m;
    if (cell.dim != deleted_->dimension(i - 2, m - 2) + contracted_->dimension(i, m)) ses_.dimensions = false;
    const SparseMatrix E = emb.at(i - 2, m - 2);
    if (sparse_rank(E) != E.cols()) ses_.injective = false;
    if (!(quo.at(i, m) * E).is_zero()) ses_.exact_middle = false;
  }
  for (const auto& [key, cell] : contracted_->cells()) {
    const SparseMatrix id = quo.at(cell.i, cell.m) * sec.at(cell.i, cell.m);
    for (Index c = 0; c < id.cols(); ++c)
      if (id.column(c) != SparseVector{{c, Integer(1)}}) ses_.surjective = false;
  }

  top_ = std::max({whole_basis_->max_degree(), contracted_basis_->max_degree(), deleted_basis_->max_degree() + 2});

  for (int i = 0; i <= top_ + 1; ++i) {
    a_.emplace(i, RatMatrix(whole_basis_->dim(i), i >= 2 ? deleted_basis_->dim(i - 2) : 0));
    b_.emplace(i, RatMatrix(contracted_basis_->dim(i), whole_basis_->dim(i)));
    c_.emplace(i, RatMatrix(i >= 1 ? deleted_basis_->dim(i - 1) : 0, contracted_basis_->dim(i)));
  }
  for (auto& [si, M] : deletion_image(*deleted_basis_, *whole_basis_, bit(e_))) a_.at(si + 2) = std::move(M);

  for (const auto& [key, cell] : whole_->cells()) {
    const int i = cell.i, m = cell.m;
    const CellCohomology* h = whole_basis_->cell(i, m);
    if (!h || h->rank() == 0) continue;
    const SparseMatrix Q = quo.at(i, m);
    RatMatrix& B = b_.at(i);
    const std::size_t col0 = whole_basis_->offset(i, m), row0 = contracted_basis_->offset(i, m);
    for (std::size_t r = 0; r < h->rank(); ++r) {
      auto coords = rational_coordinates(*contracted_basis_, i, m, Q.apply(h->representatives()[r]));
      for (std::size_t j = 0; j < coords.size(); ++j) B(row0 + j, col0 + r) = coords[j];
    }
  }

  for (const auto& [key, cell] : contracted_->cells()) {
    const int i = cell.i, m = cell.m;
    const CellCohomology* h = contracted_basis_->cell(i, m);
    if (!h || h->rank() == 0) continue;
    // Pull back along the embedding of the deleted complex at (i-1, m-2) -> (i+1, m).
    std::map<Index, Index> pullback;
    const SparseMatrix E = emb.at(i - 1, m - 2);
    for (Index c = 0; c < E.cols(); ++c) pullback.emplace(E.column(c).front().first, c);
    const SparseMatrix S = sec.at(i, m);
    const SparseMatrix D = whole_->differential(i, m);
    RatMatrix& C = c_.at(i);
    const std::size_t col0 = contracted_basis_->offset(i, m);
    for (std::size_t r = 0; r < h->rank(); ++r) {
      SparseVector y = D.apply(S.apply(h->representatives()[r]));
      SparseVector z;
      for (auto& [idx, x] : y) {
        auto it = pullback.find(idx);
        if (it == pullback.end()) throw std::logic_error("connecting map: boundary of the lift leaves the subcomplex");
        z.emplace_back(it->second, std::move(x));
      }
      z = canonical(std::move(z));
      if (z.empty()) continue;
      auto coords = rational_coordinates(*deleted_basis_, i - 1, m - 2, z);
      const std::size_t row0 = deleted_basis_->offset(i - 1, m - 2);
      for (std::size_t j = 0; j < coords.size(); ++j) C(row0 + j, col0 + r) = coords[j];
    }
  }
}

std::vector<LongExactSequence::Node> LongExactSequence::nodes() const {
  std::vector<Node> out;
  auto rk = [](const RatMatrix& m) { return m.rows() && m.cols() ? rank(m) : std::size_t{0}; };
  for (int i = 0; i <= top_; ++i) {
    if (i >= 2) {
      const std::size_t d = deleted_basis_->dim(i - 2);
      const std::size_t in = rk(c_.at(i - 1)), out_rank = rk(a_.at(i));
      out.push_back({"deleted", i - 2, d, in, out_rank, d - out_rank == in});
    }
    {
      const std::size_t d = whole_basis_->dim(i);
      const std::size_t in = rk(a_.at(i)), out_rank = rk(b_.at(i));
      out.push_back({"whole", i, d, in, out_rank, d - out_rank == in});
    }
    {
      const std::size_t d = contracted_basis_->dim(i);
      const std::size_t in = rk(b_.at(i)), out_rank = rk(c_.at(i));
      out.push_back({"contracted", i, d, in, out_rank, d - out_rank == in});
    }
  }
  return out;
}

bool LongExactSequence::compositions_vanish() const {
  for (int i = 0; i <= top_; ++i) {
    if (!(b_.at(i) * a_.at(i)).is_zero()) return false;
    if (!(c_.at(i) * b_.at(i)).is_zero()) return false;
    if (!(a_.at(i + 1) * c_.at(i)).is_zero()) return false;
  }
  return true;
}

bool LongExactSequence::exact() const {
  for (const auto& n : nodes())
    if (!n.exact) return false;
  return compositions_vanish();
}

Integer LongExactSequence::alternating_sum() const {
  Integer s = 0;
  for (int i = 0; i <= top_; ++i) {
    Integer t = static_cast<unsigned long>(whole_basis_->dim(i));
    t -= static_cast<unsigned long>(contracted_basis_->dim(i));
    if (i >= 2) t -= static_cast<unsigned long>(deleted_basis_->dim(i - 2));
    s += (i % 2 == 0) ? t : Integer(-t);
  }
  return s;
}

SequenceFiltrations deletion_filtrations(const LongExactSequence& seq) {
  return {deletion_filtration(seq.deleted_basis()), deletion_filtration(seq.whole_basis()),
          deletion_filtration(seq.contracted_basis())};
}

SequenceFiltrations grading_filtrations(const LongExactSequence& seq) {
  return {grading_filtration(seq.deleted_basis()), grading_filtration(seq.whole_basis()),
          grading_filtration(seq.contracted_basis())};
}

namespace {

enum class Term { deleted, whole, contracted };

struct FilteredMap {
  std::string name;
  Term from, to;
  int from_degree, to_degree;  // degrees inside the terms' own complexes
  const RatMatrix* f;
};

}  // namespace

StrictnessReport verify_strictness(const LongExactSequence& seq, const SequenceFiltrations& filt) {
  StrictnessReport rep;
  auto step = [&](Term t, int degree, int k) -> Subspace {
    switch (t) {
      case Term::deleted: {
        // The one-step shift; an absent degree is the zero space of the right size.
        const std::size_t n = seq.deleted_basis().dim(degree);
        if (degree < 0) return Subspace(0);
        if (filt.deleted.total(degree) != n) return k - 1 >= degree ? Subspace::whole(n) : Subspace(n);
        return filt.deleted.step(degree, k - 1);
      }
      case Term::whole: {
        const std::size_t n = seq.whole_basis().dim(degree);
        if (filt.whole.total(degree) != n) return k >= degree ? Subspace::whole(n) : Subspace(n);
        return filt.whole.step(degree, k);
      }
      case Term::contracted: {
        const std::size_t n = seq.contracted_basis().dim(degree);
        if (filt.contracted.total(degree) != n) return k >= degree ? Subspace::whole(n) : Subspace(n);
        return filt.contracted.step(degree, k);
      }
    }
    return Subspace(0);
  };

  std::vector<FilteredMap> maps;
  const int top = seq.max_degree();
  for (int i = 0; i <= top + 1; ++i) {
    maps.push_back({"a", Term::deleted, Term::whole, i - 2, i, &seq.a(i)});
    maps.push_back({"b", Term::whole, Term::contracted, i, i, &seq.b(i)});
    maps.push_back({"c", Term::contracted, Term::deleted, i, i - 1, &seq.c(i)});
  }
  const int kmax = top + 2;

  // Strictness: f(F_k X) = im f ∩ F_k Y, and f(F_k X) ⊆ F_k Y.
  for (const auto& fm : maps) {
    const std::size_t nx = fm.f->cols();
    const Subspace image = Subspace::whole(nx).image(*fm.f);
    for (int k = 0; k <= kmax; ++k) {
      const Subspace fx = step(fm.from, fm.from_degree, k).image(*fm.f);
      const Subspace fy = step(fm.to, fm.to_degree, k);
      if (!(fx == intersection(image, fy))) {
        rep.strict = false;
        rep.violations.push_back({fm.name, fm.from_degree, k, "strictness"});
      }
    }
  }

  // Exactness of the associated graded sequence at each node, for each k.
  auto graded_rank = [&](const FilteredMap& fm, int k) {
    const Subspace lower = step(fm.to, fm.to_degree, k - 1);
    const Subspace img = sum(step(fm.from, fm.from_degree, k).image(*fm.f), lower);
    return img.dim() - lower.dim();
  };
  for (std::size_t n = 0; n + 1 < maps.size(); ++n) {
    const FilteredMap& in = maps[n];
    const FilteredMap& out = maps[n + 1];
    for (int k = 0; k <= kmax; ++k) {
      const std::size_t gr = step(in.to, in.to_degree, k).dim() - step(in.to, in.to_degree, k - 1).dim();
      if (gr - graded_rank(out, k) != graded_rank(in, k)) {
        rep.graded_exact = false;
        rep.violations.push_back({out.name, out.from_degree, k, "graded exactness"});
      }
    }
  }
  return rep;
}

BridgeCheck bridge_contraction_check(const Multigraph& g, std::string_view edge_id) {
  require_connected(g, "bridge_contraction_check");
  if (edge_kind(g, edge_id) != EdgeKind::bridge)
    throw EdgeSelectionError("edge \"" + std::string(edge_id) + "\" is not a bridge");
  UpsilonComplex whole(g), contracted(contract_edge(g, edge_id));
  return {cohomology(whole), cohomology(contracted)};
}

}  // namespace upsilon
