#include "upsilon/linalg.hpp"

#include <algorithm>

namespace upsilon {

namespace {

// Floor division keeping the remainder in [0, |b|).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m(dst, c) += f * m(src, c);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m(r, dst) += f * m(r, src);
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix A = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    while (true) {
      // Minimal absolute value pivot in the trailing block.
      std::size_t pr = R, pc = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (A(i, j) != 0 && (pr == R || cmpabs(A(i, j), A(pr, pc)) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == R) goto done;
      A.swap_rows(t, pr);
      U.swap_rows(t, pr);
      A.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A(i, t) == 0) continue;
        Integer q = -floor_div(A(i, t), A(t, t));
        add_row_multiple(A, i, t, q);
        add_row_multiple(U, i, t, q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A(t, j) == 0) continue;
        Integer q = -floor_div(A(t, j), A(t, t));
        add_col_multiple(A, j, t, q);
        add_col_multiple(V, j, t, q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      add_row_multiple(A, t, bad, 1);
      add_row_multiple(U, t, bad, 1);
    }
    if (A(t, t) < 0) {
      for (std::size_t c = 0; c < C; ++c) A(t, c) = -A(t, c);
      for (std::size_t c = 0; c < R; ++c) U(t, c) = -U(t, c);
    }
  }
done:
  SmithForm s{std::move(U), std::move(A), std::move(V), t};
  if (!(s.U * m * s.V == s.D)) throw std::logic_error("smith_normal_form: U*M*V != D");
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix A = m;
  const std::size_t R = A.rows(), C = A.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    // Euclid on column c among rows >= row.
    while (true) {
      std::size_t p = R;
      for (std::size_t i = row; i < R; ++i)
        if (A(i, c) != 0 && (p == R || cmpabs(A(i, c), A(p, c)) < 0)) p = i;
      if (p == R) break;
      A.swap_rows(row, p);
      bool done = true;
      for (std::size_t i = row + 1; i < R; ++i) {
        if (A(i, c) == 0) continue;
        add_row_multiple(A, i, row, -floor_div(A(i, c), A(row, c)));
        if (A(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (A(row, c) == 0) continue;
    if (A(row, c) < 0)
      for (std::size_t j = 0; j < C; ++j) A(row, j) = -A(row, j);
    for (std::size_t i = 0; i < row; ++i) add_row_multiple(A, i, row, -floor_div(A(i, c), A(row, c)));
    ++row;
  }
  IntMatrix H(row, C);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < C; ++j) H(i, j) = A(i, j);
  return H;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix A = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < A.cols() && row < A.rows(); ++c) {
    std::size_t p = row;
    while (p < A.rows() && A(p, c) == 0) ++p;
    if (p == A.rows()) continue;
    A.swap_rows(row, p);
    Rational inv = 1 / A(row, c);
    for (std::size_t j = c; j < A.cols(); ++j) A(row, j) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == row || A(i, c) == 0) continue;
      Rational f = A(i, c);
      for (std::size_t j = c; j < A.cols(); ++j)
        if (A(row, j) != 0) A(i, j) -= f * A(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix A = m;
  return rref(A).size();
}

std::size_t rank(const IntMatrix& m) { return sparse_rank(SparseMatrix::from_dense(m)); }

std::size_t image_rank(const IntMatrix& m) { return rank(m); }

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix A = m;
  auto pivots = rref(A);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  RatMatrix K(m.cols(), m.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    K(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) K(pivots[i], k) = -A(i, f);
    ++k;
  }
  return K;
}

RatMatrix kernel_basis(const IntMatrix& m) { return kernel_basis(to_rational(m)); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix A(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = m(i, j);
    A(i, n + i) = 1;
  }
  auto pivots = rref(A);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = A(i, n + j);
  return inv;
}

std::size_t cohomology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw DimensionMismatch("cohomology_rank: maps are not composable");
  SparseMatrix comp = d_out * d_in;
  for (Index c = 0; c < comp.cols(); ++c)
    if (!comp.column(c).empty())
      throw NonzeroComposition(c, "cohomology_rank: d_out*d_in is nonzero at column " + std::to_string(c));
  return d_out.cols() - sparse_rank(d_out) - sparse_rank(d_in);
}

std::size_t cohomology_rank(const IntMatrix& d_in, const IntMatrix& d_out) {
  return cohomology_rank(SparseMatrix::from_dense(d_in), SparseMatrix::from_dense(d_out));
}

std::vector<Rational> Subspace::reduced(std::vector<Rational> v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (basis_[i][j] != 0) v[j] -= f * basis_[i][j];
  }
  return v;
}

void Subspace::add(std::vector<Rational> v) {
  if (v.size() != ambient_) throw DimensionMismatch("subspace vector has the wrong length");
  v = reduced(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return;
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  for (auto& row : basis_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(v));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<Rational> e(ambient);
    e[i] = 1;
    s.add(std::move(e));
  }
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace vector has the wrong length");
  auto r = reduced(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different spaces");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspaces live in different spaces");
  Subspace s = a;
  for (const auto& v : b.basis_) s.add(v);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspaces live in different spaces");
  // Solve sum x_i a_i = sum y_j b_j; the intersection is spanned by sum x_i a_i.
  const std::size_t n = a.ambient_, da = a.dim(), db = b.dim();
  RatMatrix M(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) M(r, i) = a.basis_[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) M(r, da + j) = -b.basis_[j][r];
  RatMatrix K = kernel_basis(M);
  Subspace s(n);
  for (std::size_t k = 0; k < K.cols(); ++k) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < da; ++i)
      if (K(i, k) != 0)
        for (std::size_t r = 0; r < n; ++r) v[r] += K(i, k) * a.basis_[i][r];
    s.add(std::move(v));
  }
  return s;
}

Subspace Subspace::image(const RatMatrix& f) const {
  if (f.cols() != ambient_) throw DimensionMismatch("map domain does not match subspace");
  Subspace s(f.rows());
  for (const auto& v : basis_) s.add(f.apply(v));
  return s;
}

Subspace Subspace::preimage(const RatMatrix& f, const Subspace& target) {
  if (f.rows() != target.ambient_) throw DimensionMismatch("map codomain does not match subspace");
  // Compose f with the projection onto the quotient by target: x is in the
  // preimage iff f(x) reduces to zero modulo target.
  const std::size_t n = f.cols();
  RatMatrix Q(f.rows(), n);
  for (std::size_t c = 0; c < n; ++c) {
    auto r = target.reduced(f.column(c));
    for (std::size_t i = 0; i < f.rows(); ++i) Q(i, c) = r[i];
  }
  RatMatrix K = kernel_basis(Q);
  Subspace s(n);
  for (std::size_t k = 0; k < K.cols(); ++k) s.add(K.column(k));
  return s;
}

Subspace subspace_span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
  return Subspace::span(ambient, vectors);
}
Subspace subspace_sum(const Subspace& a, const Subspace& b) { return sum(a, b); }
Subspace subspace_intersection(const Subspace& a, const Subspace& b) { return intersection(a, b); }
bool contains(const Subspace& s, const std::vector<Rational>& v) { return s.contains(v); }
std::size_t dim(const Subspace& s) { return s.dim(); }

IntegerLattice::IntegerLattice(std::size_t ambient, const std::vector<std::vector<Integer>>& generators)
    : ambient_(ambient) {
  IntMatrix G(generators.size(), ambient);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient) throw DimensionMismatch("lattice generator has the wrong length");
    for (std::size_t j = 0; j < ambient; ++j) G(i, j) = generators[i][j];
  }
  hnf_ = hermite_normal_form(G);
}

std::vector<Integer> IntegerLattice::reduce(std::vector<Integer> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector has the wrong length");
  for (std::size_t i = 0; i < hnf_.rows(); ++i) {
    std::size_t p = 0;
    while (hnf_(i, p) == 0) ++p;
    Integer q = floor_div(v[p], hnf_(i, p));
    if (q != 0)
      for (std::size_t j = p; j < ambient_; ++j) v[j] -= q * hnf_(i, j);
  }
  return v;
}

bool IntegerLattice::contains(std::vector<Integer> v) const {
  auto r = reduce(std::move(v));
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace upsilon
