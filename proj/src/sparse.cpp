#include "upsilon/sparse.hpp"

#include <algorithm>
#include <queue>

#include "upsilon/linalg.hpp"

namespace upsilon {

SparseVector canonical(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += x;
      if (out.back().second == 0) out.pop_back();
    } else if (x != 0) {
      out.emplace_back(i, std::move(x));
    }
  }
  return out;
}

SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Integer v = a * x[i].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Integer v = b * y[j].second;
      if (v != 0) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Integer v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Integer content(const SparseVector& v) {
  Integer g = 0;
  for (const auto& [i, x] : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(SparseVector& v) {
  if (v.empty()) return;
  Integer g = content(v);
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

std::vector<Integer> to_dense(const SparseVector& v, Index size) {
  std::vector<Integer> d(size);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

SparseVector from_dense(const std::vector<Integer>& v) {
  SparseVector s;
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::vector<SparseVector> cols_raw(cols);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw DimensionMismatch("triplet outside matrix bounds");
    cols_raw[t.col].emplace_back(t.row, std::move(t.value));
  }
  for (Index c = 0; c < cols; ++c) m.columns_[c] = canonical(std::move(cols_raw[c]));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& d) {
  SparseMatrix m(static_cast<Index>(d.rows()), static_cast<Index>(d.cols()));
  for (Index c = 0; c < m.cols_; ++c)
    for (Index r = 0; r < m.rows_; ++r)
      if (d(r, c) != 0) m.columns_[c].emplace_back(r, d(r, c));
  return m;
}

void SparseMatrix::set_column(Index c, SparseVector v) {
  v = canonical(std::move(v));
  if (!v.empty() && v.back().first >= rows_) throw DimensionMismatch("column entry outside matrix bounds");
  columns_.at(c) = std::move(v);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (Index c = 0; c < cols_; ++c)
    for (const auto& [r, x] : columns_[c]) t.columns_[r].emplace_back(c, x);
  return t;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix d(rows_, cols_);
  for (Index c = 0; c < cols_; ++c)
    for (const auto& [r, x] : columns_[c]) d(r, c) = x;
  return d;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector acc;
  for (const auto& [c, x] : v) {
    if (c >= cols_) throw DimensionMismatch("vector longer than matrix width");
    for (const auto& [r, y] : columns_[c]) acc.emplace_back(r, x * y);
  }
  return canonical(std::move(acc));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("sparse product shape mismatch");
  SparseMatrix p(a.rows_, b.cols_);
  for (Index c = 0; c < b.cols_; ++c) p.columns_[c] = a.apply(b.columns_[c]);
  return p;
}

namespace {

template <class T>
using Vec = std::vector<std::pair<Index, T>>;

template <class T>
Vec<T> convert(const SparseVector& v) {
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, Scalar<T>::from(x));
  return out;
}

template <class T>
Vec<T> combine_t(const T& a, const Vec<T>& x, const T& b, const Vec<T>& y) {
  Vec<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      T v = a * x[i].second + b * y[j].second;
      if (!Scalar<T>::is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
void divide_content(Vec<T>& v) {
  if (v.empty()) return;
  T g = 0;
  for (const auto& e : v) {
    g = Scalar<T>::gcd(g, e.second);
    if (Scalar<T>::is_unit(g)) return;
  }
  for (auto& e : v) e.second = e.second / g;
}

// Right-looking sparse elimination over the rows of `rows`. Pivots are chosen
// greedily: shortest row first, inside it a unit entry in the sparsest column.
// With `unit_only`, only unit pivots are used and rows are combined by
// unimodular operations, so the untouched remainder carries the non-trivial
// invariant factors; it is returned through `remainder`.
template <class T>
std::size_t eliminate(std::vector<Vec<T>> rows, Index ncols, bool unit_only, std::vector<Vec<T>>* remainder) {
  const std::size_t n = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::uint32_t> col_count(ncols, 0);
  std::vector<char> active(n, 1);
  std::vector<std::uint32_t> version(n, 0);
  using Item = std::tuple<std::size_t, std::uint32_t, std::uint32_t>;  // length, row, version
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  for (std::uint32_t r = 0; r < n; ++r) {
    if (!unit_only) divide_content(rows[r]);
    for (const auto& e : rows[r]) {
      col_rows[e.first].push_back(r);
      ++col_count[e.first];
    }
    if (rows[r].empty())
      active[r] = 0;
    else
      heap.emplace(rows[r].size(), r, 0);
  }

  std::size_t rank = 0;
  while (!heap.empty()) {
    auto [len, r, ver] = heap.top();
    heap.pop();
    if (!active[r] || ver != version[r]) continue;
    const Vec<T>& row = rows[r];
    std::size_t best = row.size();
    bool best_unit = false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      bool unit = Scalar<T>::is_unit(row[k].second);
      if (unit_only && !unit) continue;
      if (best == row.size() || (unit && !best_unit) ||
          (unit == best_unit && col_count[row[k].first] < col_count[row[best].first])) {
        best = k;
        best_unit = unit;
      }
    }
    if (best == row.size()) continue;  // no unit entry yet; revisited if the row changes
    const Index c = row[best].first;
    const T p = row[best].second;
    active[r] = 0;
    ++rank;
    for (const auto& e : row) --col_count[e.first];

    std::vector<std::uint32_t> targets;
    targets.swap(col_rows[c]);
    for (std::uint32_t s : targets) {
      if (s == r || !active[s]) continue;
      Vec<T>& srow = rows[s];
      auto it = std::lower_bound(srow.begin(), srow.end(), c, [](const auto& e, Index i) { return e.first < i; });
      if (it == srow.end() || it->first != c) continue;
      T a, b;
      if (Scalar<T>::is_unit(p)) {
        a = 1;
        b = -(it->second * p);
      } else {
        T g = Scalar<T>::gcd(p, it->second);
        a = p / g;
        b = -(it->second / g);
      }
      for (const auto& e : srow) --col_count[e.first];
      Vec<T> next = combine_t(a, srow, b, row);
      if (!unit_only) divide_content(next);
      for (const auto& e : next) {
        ++col_count[e.first];
        auto old = std::lower_bound(srow.begin(), srow.end(), e.first,
                                    [](const auto& x, Index i) { return x.first < i; });
        if (old == srow.end() || old->first != e.first) col_rows[e.first].push_back(s);
      }
      srow = std::move(next);
      ++version[s];
      if (srow.empty())
        active[s] = 0;
      else
        heap.emplace(srow.size(), s, version[s]);
    }
  }
  if (remainder) {
    remainder->clear();
    for (std::uint32_t r = 0; r < n; ++r)
      if (active[r] && !rows[r].empty()) remainder->push_back(rows[r]);
  }
  return rank;
}

}  // namespace

std::size_t sparse_rank(const SparseMatrix& m) {
  return with_exact_fallback([&]<class T>() {
    std::vector<Vec<T>> rows;
    rows.reserve(m.cols());
    for (Index c = 0; c < m.cols(); ++c) rows.push_back(convert<T>(m.column(c)));
    return eliminate<T>(std::move(rows), m.rows(), false, nullptr);
  });
}

std::vector<Integer> elementary_divisors(const SparseMatrix& m) {
  return with_exact_fallback([&]<class T>() {
    std::vector<Vec<T>> rows;
    rows.reserve(m.cols());
    for (Index c = 0; c < m.cols(); ++c) rows.push_back(convert<T>(m.column(c)));
    std::vector<Vec<T>> rest;
    std::size_t units = eliminate<T>(std::move(rows), m.rows(), true, &rest);
    std::vector<Integer> divisors(units, Integer(1));
    if (rest.empty()) return divisors;
    std::vector<Index> used;
    for (const auto& r : rest)
      for (const auto& e : r) used.push_back(e.first);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    IntMatrix core(rest.size(), used.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (const auto& e : rest[i]) {
        auto j = std::lower_bound(used.begin(), used.end(), e.first) - used.begin();
        core(i, j) = Scalar<T>::to_integer(e.second);
      }
    for (const Integer& d : smith_normal_form(core).invariant_factors()) divisors.push_back(d);
    std::stable_sort(divisors.begin(), divisors.end());
    return divisors;
  });
}

SparseVector Echelon::reduce(SparseVector v, Integer* scale) const {
  Index start = 0;
  Integer alpha, beta, g;
  while (true) {
    auto it = std::lower_bound(v.begin(), v.end(), start, [](const auto& e, Index i) { return e.first < i; });
    while (it != v.end() && it->first < limit_ && pivot_row_[it->first] < 0) ++it;
    if (it == v.end() || it->first >= limit_) break;
    const Index c = it->first;
    const SparseVector& p = rows_[pivot_row_[c]];
    const Integer& pv = p.front().second;
    g = gcd(pv, it->second);
    alpha = pv / g;
    beta = it->second / g;
    if (alpha < 0) {
      alpha = -alpha;
      beta = -beta;
    }
    v = combine(alpha, v, -beta, p);
    if (scale) *scale *= alpha;
    start = c + 1;
  }
  return v;
}

bool Echelon::insert(SparseVector v, SparseVector* residue) {
  v = reduce(std::move(v));
  if (v.empty() || v.front().first >= limit_) {
    if (residue) *residue = std::move(v);
    return false;
  }
  make_primitive(v);
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool Echelon::contains(const SparseVector& v) const {
  SparseVector r = reduce(v);
  return r.empty() || r.front().first >= limit_;
}

std::vector<SparseVector> sparse_kernel_basis(const SparseMatrix& m) {
  Echelon e(m.rows());
  std::vector<SparseVector> kernel;
  for (Index c = 0; c < m.cols(); ++c) {
    SparseVector v = m.column(c);
    v.emplace_back(m.rows() + c, 1);
    SparseVector residue;
    if (!e.insert(std::move(v), &residue)) {
      for (auto& x : residue) x.first -= m.rows();
      make_primitive(residue);
      kernel.push_back(std::move(residue));
    }
  }
  return kernel;
}

}  // namespace upsilon
