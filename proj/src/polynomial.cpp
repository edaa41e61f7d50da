#include "upsilon/polynomial.hpp"

#include <algorithm>

namespace upsilon {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned degree, Integer c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned n) const {
  IntPolynomial r(1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

namespace {

void append_term(std::string& out, const Integer& c, const std::string& mono) {
  const bool first = out.empty();
  Integer a = abs(c);
  if (first)
    out += c < 0 ? "-" : "";
  else
    out += c < 0 ? " - " : " + ";
  if (mono.empty())
    out += a.get_str();
  else {
    if (a != 1) out += a.get_str();
    out += mono;
  }
}

std::string power(const std::string& var, unsigned k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;)
    if (c_[k] != 0) append_term(out, c_[k], power(var, static_cast<unsigned>(k)));
  return out;
}

void BiPolynomial::add(unsigned a, unsigned b, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPolynomial::coefficient(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BiPolynomial::degree_x() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

unsigned BiPolynomial::degree_y() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

std::vector<std::vector<Integer>> BiPolynomial::grid() const {
  if (terms_.empty()) return {};
  std::vector<std::vector<Integer>> g(degree_x() + 1, std::vector<Integer>(degree_y() + 1));
  for (const auto& [k, c] : terms_) g[k.first][k.second] = c;
  return g;
}

BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b) {
  BiPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
  return r;
}

BiPolynomial BiPolynomial::times_x() const {
  BiPolynomial r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + 1, k.second}, c);
  return r;
}

BiPolynomial BiPolynomial::times_y() const {
  BiPolynomial r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first, k.second + 1}, c);
  return r;
}

std::string BiPolynomial::to_string(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  // Graded by total degree, then by x-degree, descending.
  std::vector<std::pair<Key, Integer>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
    const unsigned dp = p.first.first + p.first.second, dq = q.first.first + q.first.second;
    if (dp != dq) return dp > dq;
    return p.first.first > q.first.first;
  });
  std::string out;
  for (const auto& [k, c] : v) append_term(out, c, power(x, k.first) + power(y, k.second));
  return out;
}

}  // namespace upsilon
