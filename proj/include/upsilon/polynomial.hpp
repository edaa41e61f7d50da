#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "upsilon/numeric.hpp"

namespace upsilon {

// Univariate integer polynomial, dense ascending coefficients, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) : IntPolynomial(std::vector<Integer>{Integer(c)}) {}
  explicit IntPolynomial(std::vector<Integer> coefficients);
  static IntPolynomial monomial(unsigned degree, Integer c = 1);

  const std::vector<Integer>& coefficients() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coefficient(unsigned k) const { return k < c_.size() ? c_[k] : Integer(0); }
  bool is_zero() const { return c_.empty(); }
  Integer operator()(const Integer& x) const;

  IntPolynomial pow(unsigned n) const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // Descending-order human form, e.g. "L^4 - L^3 + 3L^2 - L + 1".
  std::string to_string(const std::string& var = "L") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Bivariate integer polynomial; exponents (a, b) of x^a y^b.
class BiPolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;
  BiPolynomial() = default;

  void add(unsigned a, unsigned b, const Integer& c);
  Integer coefficient(unsigned a, unsigned b) const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  unsigned degree_x() const;
  unsigned degree_y() const;
  // Dense grid g[a][b].
  std::vector<std::vector<Integer>> grid() const;

  friend BiPolynomial operator+(const BiPolynomial& a, const BiPolynomial& b);
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) = default;
  BiPolynomial times_x() const;
  BiPolynomial times_y() const;

  std::string to_string(const std::string& x, const std::string& y) const;

 private:
  std::map<Key, Integer> terms_;  // no zero coefficients
};

}  // namespace upsilon
