#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "upsilon/upsilon.hpp"

namespace upsilon {

// Cell-wise map of complexes shifting both i and m by `shift`.
struct ChainMap {
  const UpsilonComplex* source = nullptr;
  const UpsilonComplex* target = nullptr;
  int shift = 0;
  std::map<std::pair<int, int>, SparseMatrix> blocks;  // source (i, m) -> target (i+shift, m+shift)

  // Matrix on the source cell (i, m); zero if either side is absent.
  SparseMatrix at(int i, int m) const;
  // Number of nonzero entries of d*f - f*d over all cells.
  std::size_t commutation_residual() const;
};

// Summands of G\K placed onto the summands J' u K of G (K loop free, G\K connected).
ChainMap subcomplex_embedding(const UpsilonComplex& sub, const UpsilonComplex& full, EdgeMask K);

// Quotient of Y(G) by the summands containing e, identified with Y(G/e).
// Summands with e in J map to zero.
ChainMap quotient_identification(const UpsilonComplex& full, const UpsilonComplex& contracted, std::size_t e);

// Inverse of the quotient identification, landing on the summands with e not in J.
ChainMap quotient_section(const UpsilonComplex& full, const UpsilonComplex& contracted, std::size_t e);

// Cochain-level exactness of 0 -> Y(G\e)[-2] -> Y(G) -> Y(G/e) -> 0.
struct ShortExactCheck {
  bool injective = false;
  bool surjective = false;
  bool exact_middle = false;
  bool dimensions = false;
  bool ok() const { return injective && surjective && exact_middle && dimensions; }
};

// Long exact sequence of the deletion-contraction of a non-loop non-bridge edge:
//   H^{i-2}(G\e) -a-> H^i(G) -b-> H^i(G/e) -c-> H^{i-1}(G\e) -> ...
// Matrices act on the coordinates of the CohomologyBasis of each complex.
class LongExactSequence {
 public:
  LongExactSequence(const Multigraph& g, std::string_view edge_id);

  const Multigraph& graph() const { return graph_; }
  const std::string& edge() const { return edge_; }
  const UpsilonComplex& deleted() const { return *deleted_; }
  const UpsilonComplex& whole() const { return *whole_; }
  const UpsilonComplex& contracted() const { return *contracted_; }
  const CohomologyBasis& deleted_basis() const { return *deleted_basis_; }
  const CohomologyBasis& whole_basis() const { return *whole_basis_; }
  const CohomologyBasis& contracted_basis() const { return *contracted_basis_; }
  const ShortExactCheck& short_exact() const { return ses_; }
  std::size_t embedding_residual() const { return embedding_residual_; }
  std::size_t quotient_residual() const { return quotient_residual_; }

  int max_degree() const { return top_; }
  // a_i : H^{i-2}(G\e) -> H^i(G);  b_i : H^i(G) -> H^i(G/e);  c_i : H^i(G/e) -> H^{i-1}(G\e).
  const RatMatrix& a(int i) const { return a_.at(i); }
  const RatMatrix& b(int i) const { return b_.at(i); }
  const RatMatrix& c(int i) const { return c_.at(i); }

  struct Node {
    std::string term;  // "deleted", "whole", "contracted"
    int degree;        // cohomological degree inside that term's own complex
    std::size_t dim;
    std::size_t rank_in, rank_out;
    bool exact;
  };
  std::vector<Node> nodes() const;
  bool compositions_vanish() const;
  bool exact() const;
  // Sum of (-1)^i dim over the sequence, with deleted H^j in position j+2.
  Integer alternating_sum() const;

 private:
  Multigraph graph_;
  std::string edge_;
  std::size_t e_;
  std::unique_ptr<UpsilonComplex> deleted_, whole_, contracted_;
  std::unique_ptr<CohomologyBasis> deleted_basis_, whole_basis_, contracted_basis_;
  ShortExactCheck ses_;
  std::size_t embedding_residual_ = 0, quotient_residual_ = 0;
  int top_ = 0;
  std::map<int, RatMatrix> a_, b_, c_;
};

// Unshifted filtrations of the three terms. verify_strictness reads the first
// term with a one-step shift: F_k H^{i-2}(G\e) = D_{k-1} H^{i-2}(G\e).
struct SequenceFiltrations {
  Filtration deleted, whole, contracted;
};
SequenceFiltrations deletion_filtrations(const LongExactSequence& seq);
SequenceFiltrations grading_filtrations(const LongExactSequence& seq);

struct StrictnessReport {
  struct Violation {
    std::string map;  // "a", "b" or "c"
    int degree;       // source degree inside the source term's own complex
    int k;
    std::string kind;  // "strictness" or "graded exactness"
  };
  bool strict = true;
  bool graded_exact = true;
  std::vector<Violation> violations;
  bool ok() const { return strict && graded_exact; }
};

StrictnessReport verify_strictness(const LongExactSequence& seq, const SequenceFiltrations& f);

// H(G) and H(G/e) rank tables for a bridge e; equal by the bridge contraction isomorphism.
struct BridgeCheck {
  BigradedCohomology whole, contracted;
  bool equal() const { return whole.ranks == contracted.ranks; }
};
BridgeCheck bridge_contraction_check(const Multigraph& g, std::string_view edge_id);

// Thrown for edges that do not admit a deletion-contraction sequence.
struct EdgeSelectionError : GraphError {
  using GraphError::GraphError;
};

}  // namespace upsilon
