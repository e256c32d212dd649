#include "inchilb/genfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace inchilb {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int vector_total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

}  // namespace

WeightAssignment WeightAssignment::standard(int r) {
  if (r < 1) throw std::invalid_argument("weights need r >= 1");
  return WeightAssignment{1, std::vector<std::vector<int>>(r, {1})};
}

WeightAssignment WeightAssignment::multigraded(
    std::vector<std::vector<int>> weights) {
  if (weights.empty()) throw std::invalid_argument("weights need r >= 1");
  const int k = static_cast<int>(weights[0].size());
  if (k < 1) throw std::invalid_argument("weights need k >= 1");
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != k)
      throw std::invalid_argument("weight vectors have inconsistent lengths");
    bool nonzero = false;
    for (int e : w) {
      if (e < 0) throw std::invalid_argument("weights must be nonnegative");
      nonzero = nonzero || e > 0;
    }
    if (!nonzero) throw std::invalid_argument("zero weight vector");
  }
  return WeightAssignment{k, std::move(weights)};
}

MultiPoly WeightAssignment::letter_weight(int label) const {
  if (label < 0 || label >= letters())
    throw std::invalid_argument("letter label out of range");
  std::vector<int> exps(nvars(), 0);
  if (label == 0) {
    exps[0] = 1;
  } else {
    for (int c = 0; c < k; ++c) exps[1 + c] = xi_exponent[label - 1][c];
  }
  return MultiPoly::monomial(nvars(), std::move(exps));
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  const int nvars = m[0][0].nvars();
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix is not square");

  MultiPoly previous_pivot = MultiPoly::constant(nvars, 1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    size_t best = 0;
    for (int i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      size_t nnz = 0;
      for (int j = k; j < n; ++j) nnz += !m[i][j].is_zero();
      if (pivot < 0 || nnz < best) {
        pivot = i;
        best = nnz;
      }
    }
    if (pivot < 0) return MultiPoly(nvars);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    if (k == n - 1) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] =
            (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(previous_pivot);
      m[i][k] = MultiPoly(nvars);
    }
    previous_pivot = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RationalFn genfunc(const std::vector<std::vector<std::vector<int>>>& letter_matrix,
                   const std::vector<int>& e1, const std::vector<int>& u,
                   const WeightAssignment& wt) {
  if (static_cast<int>(letter_matrix.size()) != wt.letters())
    throw std::invalid_argument("matrix count does not match the alphabet");
  const int n = static_cast<int>(e1.size());
  if (n < 1) throw std::invalid_argument("transfer system needs >= 1 state");
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("e1 and u dimensions differ");
  for (const auto& mat : letter_matrix) {
    if (static_cast<int>(mat.size()) != n)
      throw std::invalid_argument("letter matrix dimension mismatch");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("letter matrix dimension mismatch");
  }

  const int nvars = wt.nvars();
  std::vector<std::vector<MultiPoly>> b(
      n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
  for (int label = 0; label < wt.letters(); ++label) {
    const MultiPoly weight = wt.letter_weight(label);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int counted = letter_matrix[label][i][j];
        if (counted != 0)
          b[i][j] -= weight * MultiPoly::constant(nvars, counted);
      }
  }
  for (int i = 0; i < n; ++i)
    b[i][i] += MultiPoly::constant(nvars, 1);

  MultiPoly det_b = bareiss_determinant(b);
  if (det_b.is_zero())
    throw std::logic_error("transfer matrix is singular");

  std::vector<std::vector<MultiPoly>> bordered(
      n + 1, std::vector<MultiPoly>(n + 1, MultiPoly(nvars)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) bordered[i][j] = b[i][j];
    bordered[i][n] = MultiPoly::constant(nvars, e1[i]);
    bordered[n][i] = MultiPoly::constant(nvars, u[i]);
  }
  MultiPoly num = -bareiss_determinant(std::move(bordered));
  return RationalFn::make(std::move(num), std::move(det_b));
}

RationalFn genfunc(const TransferData& td, const WeightAssignment& wt) {
  return genfunc(td.letter_matrix, td.e1, td.u, wt);
}

Int CoeffTable::at(int n, const std::vector<int>& t) const {
  auto it = entries.find({n, t});
  return it == entries.end() ? Int(0) : it->second;
}

void CoeffTable::add(int n, std::vector<int> t, Int v) {
  if (v == 0) return;
  auto key = std::make_pair(n, std::move(t));
  Int& slot = entries[key];
  slot += v;
  if (slot == 0) entries.erase(key);
}

void CoeffTable::merge(const CoeffTable& other) {
  for (const auto& [key, v] : other.entries) add(key.first, key.second, v);
}

CoeffTable taylor(const RationalFn& f, int smax, int dmax) {
  if (smax < 0 || dmax < 0)
    throw std::invalid_argument("truncation bounds must be >= 0");
  const int nvars = f.nvars();
  const int k = nvars - 1;
  const Int den0 = f.den.constant_term();
  if (den0 == 0)
    throw std::invalid_argument("denominator has zero constant term");

  // all exponent vectors in the box, ordered so that componentwise-smaller
  // vectors come first (total degree is a linear extension)
  std::vector<std::vector<int>> box;
  std::vector<int> current(nvars, 0);
  auto fill = [&](auto&& self, int var, int left) -> void {
    if (var == nvars) {
      box.push_back(current);
      return;
    }
    const int cap = var == 0 ? smax : left;
    for (int e = 0; e <= cap; ++e) {
      current[var] = e;
      self(self, var + 1, var == 0 ? left : left - e);
    }
    current[var] = 0;
  };
  fill(fill, 0, dmax);
  std::sort(box.begin(), box.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              const int ta = vector_total(a), tb = vector_total(b);
              if (ta != tb) return ta < tb;
              return a < b;
            });

  std::map<std::vector<int>, Rational> coeff;
  std::vector<int> offset(nvars);
  for (const std::vector<int>& e : box) {
    Rational c(f.num.coefficient(e));
    for (const auto& [eb, cb] : f.den.terms()) {
      if (vector_total(eb) == 0) continue;
      bool inside = true;
      for (int v = 0; v < nvars; ++v) {
        offset[v] = e[v] - eb[v];
        if (offset[v] < 0) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      c -= Rational(cb) * coeff.at(offset);
    }
    c /= Rational(den0);
    coeff.emplace(e, std::move(c));
  }

  CoeffTable out;
  out.k = k;
  for (const auto& [e, c] : coeff) {
    if (c == 0) continue;
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("series coefficient is not an integer");
    out.add(e[0], std::vector<int>(e.begin() + 1, e.end()),
            boost::multiprecision::numerator(c));
  }
  return out;
}

}  // namespace inchilb
