#include "inchilb/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace inchilb {

namespace {

int vector_total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

struct ExpLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return exponent_less(a, b);
  }
};

}  // namespace

bool exponent_less(const std::vector<int>& a, const std::vector<int>& b) {
  const int ta = vector_total(a), tb = vector_total(b);
  if (ta != tb) return ta < tb;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

int MultiPoly::check_nvars(int nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial needs nvars >= 1");
  return nvars;
}

void MultiPoly::check_same_vars(const MultiPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials have different variable counts");
}

MultiPoly MultiPoly::constant(int nvars, Int c) {
  MultiPoly out(nvars);
  if (c != 0) out.terms_.emplace_back(std::vector<int>(nvars, 0), std::move(c));
  return out;
}

MultiPoly MultiPoly::monomial(int nvars, std::vector<int> exps, Int c) {
  MultiPoly out(nvars);
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c != 0) out.terms_.emplace_back(std::move(exps), std::move(c));
  return out;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> exps(nvars, 0);
  exps[var] = 1;
  return monomial(nvars, std::move(exps));
}

Int MultiPoly::coefficient(const std::vector<int>& exps) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exps,
      [](const auto& term, const std::vector<int>& e) {
        return exponent_less(term.first, e);
      });
  if (it == terms_.end() || it->first != exps) return 0;
  return it->second;
}

Int MultiPoly::constant_term() const {
  if (terms_.empty() || vector_total(terms_.front().first) != 0) return 0;
  return terms_.front().second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : vector_total(terms_.back().first);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_vars(other);
  std::vector<std::pair<std::vector<int>, Int>> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i].first == other.terms_[j].first) {
      Int c = terms_[i].second + other.terms_[j].second;
      if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    } else if (exponent_less(terms_[i].first, other.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(other.terms_[j++]);
    }
  }
  while (i < terms_.size()) merged.push_back(terms_[i++]);
  while (j < other.terms_.size()) merged.push_back(other.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  return *this += -other;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  std::map<std::vector<int>, Int, ExpLess> acc;
  std::vector<int> key(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) key[v] = ea[v] + eb[v];
      acc[key] += ca * cb;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly out = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Int MultiPoly::evaluate(const std::vector<Int>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (int v = 0; v < nvars_; ++v)
      for (int i = 0; i < e[v]; ++i) term *= point[v];
    total += term;
  }
  return total;
}

Int MultiPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

MultiPoly MultiPoly::divide_content(const Int& g) const {
  if (g == 0) throw std::invalid_argument("zero content divisor");
  MultiPoly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Int q = c / g;
    if (q * g != c) throw std::logic_error("content does not divide");
    out.terms_.emplace_back(e, std::move(q));
  }
  return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_same_vars(divisor);
  if (divisor.is_zero())
    throw std::invalid_argument("division by the zero polynomial");
  MultiPoly quotient(nvars_);
  if (is_zero()) return quotient;

  // constant divisor: coefficientwise
  if (divisor.term_count() == 1 &&
      vector_total(divisor.terms_[0].first) == 0) {
    const Int& d = divisor.terms_[0].second;
    if (d == 1) return *this;
    quotient.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Int q = c / d;
      if (q * d != c) throw std::logic_error("polynomial division not exact");
      quotient.terms_.emplace_back(e, std::move(q));
    }
    return quotient;
  }

  // cancel leading terms; the canonical order is a graded monomial order, so
  // exact division strictly shrinks the remainder's leading term
  MultiPoly remainder = *this;
  const auto& dlead = divisor.terms_.back();
  while (!remainder.is_zero()) {
    const auto& rlead = remainder.terms_.back();
    std::vector<int> e(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      e[v] = rlead.first[v] - dlead.first[v];
      if (e[v] < 0) throw std::logic_error("polynomial division not exact");
    }
    Int c = rlead.second / dlead.second;
    if (c * dlead.second != rlead.second)
      throw std::logic_error("polynomial division not exact");
    MultiPoly t = monomial(nvars_, std::move(e), std::move(c));
    quotient += t;
    remainder -= t * divisor;
  }
  return quotient;
}

namespace {

void append_term(std::string& out, bool first, const std::vector<int>& e,
                 const Int& c, const std::vector<std::string>& names,
                 bool latex) {
  const bool negative = c < 0;
  const Int magnitude = boost::multiprecision::abs(c);
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  std::vector<std::string> factors;
  if (magnitude != 1 || vector_total(e) == 0)
    factors.push_back(magnitude.str());
  for (size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    std::string f = names[v];
    if (e[v] > 1)
      f += latex ? "^{" + std::to_string(e[v]) + "}"
                 : "^" + std::to_string(e[v]);
    factors.push_back(std::move(f));
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += latex ? " " : "*";
    out += factors[i];
  }
}

}  // namespace

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i)
    append_term(out, i == 0, terms_[i].first, terms_[i].second, names, false);
  return out;
}

std::string MultiPoly::latex(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i)
    append_term(out, i == 0, terms_[i].first, terms_[i].second, names, true);
  return out;
}

RationalFn RationalFn::make(MultiPoly num, MultiPoly den) {
  if (num.nvars() != den.nvars())
    throw std::invalid_argument("numerator and denominator variable counts differ");
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  if (den.constant_term() == 0)
    throw std::invalid_argument("denominator must be a unit at the origin");
  const int nv = num.nvars();
  if (num.is_zero())
    return RationalFn{MultiPoly(nv), MultiPoly::constant(nv, 1)};
  Int g = boost::multiprecision::gcd(num.content(), den.content());
  if (g > 1) {
    num = num.divide_content(g);
    den = den.divide_content(g);
  }
  if (den.constant_term() < 0) {
    num = -num;
    den = -den;
  }
  return RationalFn{std::move(num), std::move(den)};
}

std::string RationalFn::str(const std::vector<std::string>& names) const {
  if (num.is_zero()) return "0";
  return "(" + num.str(names) + ")/(" + den.str(names) + ")";
}

std::string RationalFn::latex(const std::vector<std::string>& names) const {
  if (num.is_zero()) return "0";
  return "\\frac{" + num.latex(names) + "}{" + den.latex(names) + "}";
}

bool rat_eq(const RationalFn& f, const RationalFn& g) {
  if (f.nvars() != g.nvars())
    throw std::invalid_argument("rational functions have different variable counts");
  return f.num * g.den == g.num * f.den;
}

std::vector<std::string> series_var_names(int k) {
  std::vector<std::string> names{"s"};
  for (const std::string& t : t_var_names(k)) names.push_back(t);
  return names;
}

std::vector<std::string> t_var_names(int k) {
  if (k < 1) throw std::invalid_argument("grading needs k >= 1");
  if (k == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace inchilb
