#pragma once

#include <map>
#include <utility>
#include <vector>

#include "inchilb/automata.hpp"
#include "inchilb/multipoly.hpp"

namespace inchilb {

/// Weight of each letter as a monomial in the series variables: tau maps to
/// s (variable 0) and xi_i maps to a nonconstant monomial in the k grading
/// variables t_1..t_k.  The standard grading is k = 1 with every xi_i -> t.
struct WeightAssignment {
  int k = 1;
  std::vector<std::vector<int>> xi_exponent;  // per xi_i, length-k vector

  static WeightAssignment standard(int r);
  static WeightAssignment multigraded(std::vector<std::vector<int>> weights);

  int letters() const { return static_cast<int>(xi_exponent.size()) + 1; }
  int nvars() const { return k + 1; }
  MultiPoly letter_weight(int label) const;
};

/// Determinant by fraction-free Bareiss elimination with row pivoting; every
/// interior division is exact.  Pivots prefer sparse rows, which keeps fill
/// low on the near-diagonal transfer matrices.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// The weighted path series u^T (I - sum_l w(l) M_l)^{-1} e1 as an exact
/// rational function.  With B = I - sum_l w(l) M_l, the value is computed
/// fraction-free as -det([[B, e1], [u^T, 0]]) / det(B); the denominator is
/// det(B) up to the RationalFn normalization.  B is the identity at the
/// origin, so det(B) is nonzero whenever the weights are valid.
RationalFn genfunc(const std::vector<std::vector<std::vector<int>>>& letter_matrix,
                   const std::vector<int>& e1, const std::vector<int>& u,
                   const WeightAssignment& wt);
RationalFn genfunc(const TransferData& td, const WeightAssignment& wt);

/// Truncated coefficient table of a series: key (n, t-multidegree), zero
/// entries never stored, so map equality is table equality on the box.
struct CoeffTable {
  int k = 1;
  std::map<std::pair<int, std::vector<int>>, Int> entries;

  Int at(int n, const std::vector<int>& t) const;
  void add(int n, std::vector<int> t, Int v);
  void merge(const CoeffTable& other);
  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

/// Power-series coefficients of f on the box {s-degree <= smax, total
/// t-degree <= dmax} by recursive convolution against the denominator.
/// Requires a denominator with nonzero constant term; the coefficients must
/// come out integral (they do for every normalized transfer series, whose
/// denominator is +-1 at the origin).
CoeffTable taylor(const RationalFn& f, int smax, int dmax);

}  // namespace inchilb
