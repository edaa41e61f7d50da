#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "upsilon/matrix.hpp"
#include "upsilon/sparse.hpp"

namespace upsilon {

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  // Diagonal entries d1 | d2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors() const;
};

// U*M*V = D with U, V unimodular; the identity is re-verified before returning.
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form: H = W*M with W unimodular, H in echelon form
// with positive pivots and entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t image_rank(const IntMatrix& m);

// Columns span ker m over Q; every column is annihilated by m.
RatMatrix kernel_basis(const IntMatrix& m);
RatMatrix kernel_basis(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

struct NonzeroComposition : std::logic_error {
  NonzeroComposition(std::size_t witness, const std::string& what)
      : std::logic_error(what), witness_column(witness) {}
  std::size_t witness_column;
};

// dim ker(d_out) - rank(d_in), after checking d_out*d_in = 0.
std::size_t cohomology_rank(const IntMatrix& d_in, const IntMatrix& d_out);
std::size_t cohomology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out);

// Subspace of Q^n in reduced row echelon form (canonical representation).
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  void add(std::vector<Rational> v);
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersection(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  // Image of the subspace under a linear map given as a matrix acting on columns.
  Subspace image(const RatMatrix& f) const;
  // Preimage under f of `target` (a subspace of the codomain).
  static Subspace preimage(const RatMatrix& f, const Subspace& target);

 private:
  std::vector<Rational> reduced(std::vector<Rational> v) const;

  std::size_t ambient_;
  std::vector<std::vector<Rational>> basis_;  // RREF rows, sorted by pivot
  std::vector<std::size_t> pivots_;
};

Subspace subspace_span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const std::vector<Rational>& v);
std::size_t dim(const Subspace& s);

// Membership in a full-rank-or-not integer lattice given by generators.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t ambient, const std::vector<std::vector<Integer>>& generators);
  bool contains(std::vector<Integer> v) const;
  // Canonical representative of v modulo the lattice.
  std::vector<Integer> reduce(std::vector<Integer> v) const;

 private:
  std::size_t ambient_;
  IntMatrix hnf_;
};

}  // namespace upsilon
