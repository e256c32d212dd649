#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace inchilb {

using Int = boost::multiprecision::cpp_int;

/// Canonical term order: total degree ascending, ties broken by comparing
/// exponent vectors lexicographically with variable 0 (the tau weight s)
/// first and the larger vector sorting earlier.  Within one degree this puts
/// s-heavy terms before t-heavy ones, e.g. 1 < s < t < s^2 < s*t < t^2.
bool exponent_less(const std::vector<int>& a, const std::vector<int>& b);

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  Terms are kept sorted in the canonical order with no zero
/// coefficients, so representation equality is structural equality.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars) : nvars_(check_nvars(nvars)) {}

  static MultiPoly constant(int nvars, Int c);
  static MultiPoly monomial(int nvars, std::vector<int> exps, Int c = 1);
  static MultiPoly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<std::vector<int>, Int>>& terms() const {
    return terms_;
  }

  Int coefficient(const std::vector<int>& exps) const;
  Int constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a += b;
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a -= b;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(int e) const;

  Int evaluate(const std::vector<Int>& point) const;

  /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
  Int content() const;
  MultiPoly divide_content(const Int& g) const;

  /// Quotient of an exact division; throws std::logic_error when the
  /// divisor does not divide this polynomial.  Exactness is what the
  /// fraction-free elimination guarantees for its interior divisions.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string latex(const std::vector<std::string>& names) const;

 private:
  static int check_nvars(int nvars);
  void check_same_vars(const MultiPoly& other) const;

  int nvars_;
  std::vector<std::pair<std::vector<int>, Int>> terms_;
};

/// num/den with the joint integer content removed and the sign fixed so that
/// den has positive constant term.  den must be a unit at the origin, which
/// every transfer-matrix denominator is.  Zero is canonicalized to 0/1.
struct RationalFn {
  MultiPoly num;
  MultiPoly den;

  static RationalFn make(MultiPoly num, MultiPoly den);

  int nvars() const { return num.nvars(); }
  std::string str(const std::vector<std::string>& names) const;
  std::string latex(const std::vector<std::string>& names) const;
};

/// Equality as rational functions by cross multiplication; no multivariate
/// gcd is ever computed.
bool rat_eq(const RationalFn& f, const RationalFn& g);

/// Variable names for display: {"s","t"} when k == 1, else {"s","t1",...}.
std::vector<std::string> series_var_names(int k);
std::vector<std::string> t_var_names(int k);

}  // namespace inchilb
