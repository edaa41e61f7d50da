#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "upsilon/exterior.hpp"
#include "upsilon/graph.hpp"
#include "upsilon/linalg.hpp"
#include "upsilon/sparse.hpp"

namespace upsilon {

// H_1(G\J) + H^1(G\J) for a connected spanning subgraph (V, alive).
// Basis: fundamental cycles theta_0..theta_{b-1} of the greedy spanning tree,
// then the dual cochain classes phi_j = [delta_{f_j}] of the defining edges f_j,
// so that <theta_i, phi_j> = delta_ij.
class HHSpace {
 public:
  HHSpace(const Multigraph& g, EdgeMask alive);

  EdgeMask alive() const { return alive_; }
  std::size_t num_edges() const { return num_edges_; }
  unsigned b1() const { return static_cast<unsigned>(cycles_.size()); }
  unsigned rank() const { return 2 * b1(); }
  const std::vector<std::size_t>& cotree() const { return cotree_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  // <theta_i, e>; zero if e is not in the subgraph.
  int pairing(unsigned i, std::size_t e) const { return static_cast<int>(cycles_[i].coefficients[e]); }
  // Pairing of basis vector k with e (zero on the cochain block).
  int basis_pairing(unsigned k, std::size_t e) const { return k < b1() ? pairing(k, e) : 0; }
  // Coordinates <theta_j, c> of a cochain on the edges (indexed by parent edges).
  std::vector<Integer> cochain_coordinates(const std::vector<Integer>& cochain) const;
  // Coordinates of a cycle (read off at the defining edges).
  std::vector<Integer> cycle_coordinates(const std::vector<Integer>& cycle) const;

 private:
  EdgeMask alive_;
  std::size_t num_edges_;
  std::vector<std::size_t> cotree_;
  std::vector<Cycle> cycles_;
};

HHSpace hh_space(const Multigraph& g);

// (theta, gamma) -> (0, <theta, e>[e]) on the HHSpace basis.
IntMatrix d_prime(const HHSpace& h, std::size_t edge);
IntMatrix d_prime(const Multigraph& g, std::string_view edge_id);

// Images of the basis of HH(G\J) in HH(G\J\e) under the identification of
// ker d'_e / span(theta*) with HH(G\J\e), and the pairing coefficients; the
// ingredients of d_e. `e` must be a non-bridge edge of the source.
struct DeletionData {
  std::vector<int> pairing;                                       // per source basis vector
  std::vector<std::vector<std::pair<unsigned, Integer>>> image;   // per source basis vector
  bool monomial = false;  // every image is a single +-1 entry, distinct targets
};
DeletionData deletion_data(const HHSpace& source, const HHSpace& target, std::size_t e);

// d_e applied to one wedge monomial of degree l; result in target monomials of degree l-1.
WedgeVector apply_deletion(const DeletionData& data, Monomial s);

// d_e : wedge^l HH(G\J) -> wedge^{l-1} HH(G\J\e) on lexicographic wedge bases.
IntMatrix edge_deletion_map(const Multigraph& g, EdgeMask J, std::string_view edge_id, unsigned l);

struct Summand {
  EdgeMask removed;  // J
  HHSpace space;     // HH(G\J)
};

struct CellBlock {
  std::size_t summand;
  std::size_t offset;
};

// Fixed (i, m) piece: summands with |J| = k = i - m/2 in exterior degree l = m - i.
struct Cell {
  int i = 0, m = 0;
  std::vector<CellBlock> blocks;
  std::size_t dim = 0;
  SparseMatrix d;  // to cell (i+1, m)
};

class UpsilonComplex {
 public:
  explicit UpsilonComplex(const Multigraph& g);

  const Multigraph& graph() const { return graph_; }
  const std::vector<Summand>& summands() const { return summands_; }
  std::optional<std::size_t> find_summand(EdgeMask removed) const;

  // Nonempty cells ordered by (m, i).
  const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }
  const Cell* cell(int i, int m) const;
  std::size_t dimension(int i, int m) const;
  std::size_t total_dimension() const;
  // Differential out of (i, m); a matrix with zero rows if the target cell is empty.
  SparseMatrix differential(int i, int m) const;
  // Offset of summand s's wedge block inside its cell in degree l, if nonempty.
  std::optional<std::size_t> block_offset(std::size_t s, unsigned l) const;

 private:
  Multigraph graph_;
  std::vector<Summand> summands_;
  std::map<EdgeMask, std::size_t> summand_index_;
  std::map<std::pair<int, int>, Cell> cells_;  // key (m, i)
  std::vector<std::vector<std::size_t>> offsets_;  // [summand][l]
};

UpsilonComplex build_complex(const Multigraph& g);

struct BigradedCohomology {
  std::map<std::pair<int, int>, std::size_t> ranks;  // (i, m) -> rank over Q, every cell present
  bool has_torsion_data = false;
  std::map<std::pair<int, int>, std::vector<Integer>> torsion;  // (i, m) -> invariant factors > 1

  std::size_t rank(int i, int m) const;
  std::map<int, std::size_t> betti() const;
  Integer euler_characteristic() const;
};

BigradedCohomology cohomology(const UpsilonComplex& c, bool with_torsion = false);

// Explicit cohomology of one cell: representatives of a basis of H^i_m and
// coordinates of arbitrary cocycles with respect to it.
class CellCohomology {
 public:
  CellCohomology(const UpsilonComplex& c, int i, int m);
  std::size_t rank() const { return reps_.size(); }
  std::size_t ambient() const { return dim_; }
  const std::vector<SparseVector>& representatives() const { return reps_; }
  const std::vector<SparseVector>& cocycles() const { return cocycles_; }
  // Throws std::logic_error if v is not a cocycle.
  std::vector<Rational> coordinates(const SparseVector& v) const;

 private:
  Index dim_;
  Echelon echelon_;
  std::vector<SparseVector> reps_;
  std::vector<SparseVector> cocycles_;
};

// H^i = direct sum over m of H^i_m, coordinates ordered by increasing m.
class CohomologyBasis {
 public:
  explicit CohomologyBasis(const UpsilonComplex& c);
  const UpsilonComplex& complex() const { return *complex_; }
  const CellCohomology* cell(int i, int m) const;
  std::size_t dim(int i) const;
  // Offset of the H^i_m block inside H^i.
  std::size_t offset(int i, int m) const;
  // Upsilon-degree m of each coordinate of H^i.
  std::vector<int> weights(int i) const;
  int max_degree() const { return max_degree_; }

 private:
  const UpsilonComplex* complex_;
  std::map<std::pair<int, int>, CellCohomology> cells_;  // key (i, m)
  int max_degree_ = 0;
};

// Increasing filtration D_k of each H^i, as subspaces in CohomologyBasis
// coordinates. D_k = 0 for k < 0 and D_k = H^i for k >= i.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(std::map<int, std::vector<Subspace>> steps) : steps_(std::move(steps)) {}
  // steps[i][k] for 0 <= k <= i.
  const std::map<int, std::vector<Subspace>>& steps() const { return steps_; }
  Subspace step(int i, int k) const;
  std::size_t dim(int i, int k) const;
  std::size_t total(int i) const;
  struct Entry {
    int i, k;
    std::size_t dim;
  };
  std::vector<Entry> table() const;
  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::map<int, std::vector<Subspace>> steps_;
};

// D_k H^i = sum of H^i_m over m <= 2k.
Filtration grading_filtration(const BigradedCohomology& bc);
Filtration grading_filtration(const CohomologyBasis& basis);

// Span-of-images definition: D_{i-k} H^i is spanned by the images of
// H^{i-2k}(G\K) for |K| = k, G\K connected, K free of loops.
Filtration deletion_filtration(const CohomologyBasis& basis);
Filtration deletion_filtration(const Multigraph& g);

// Classes of the subcomplex G\K -> G (K loop free, G\K connected) in the
// coordinates of `target`, one column per basis class of H^{i'}(G\K).
// Returned per source degree i'.
std::map<int, RatMatrix> deletion_image(const CohomologyBasis& source, const CohomologyBasis& target, EdgeMask K);

}  // namespace upsilon
