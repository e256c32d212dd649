#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inchilb {

/// One symbol of the word alphabet {tau, xi_1, ..., xi_r}.
///
/// Decoding a word right to left, xi_i contributes the variable x_{i,0} and
/// tau shifts every column index produced so far up by one.  Equivalently,
/// reading left to right, a xi_i preceded by c taus contributes x_{i,c}.
class Letter {
 public:
  static Letter tau() { return Letter(0); }
  static Letter xi(int index) {
    if (index < 1) throw std::invalid_argument("xi index must be >= 1");
    return Letter(index);
  }

  bool is_tau() const { return value_ == 0; }
  int xi_index() const {
    if (is_tau()) throw std::logic_error("tau carries no xi index");
    return value_;
  }
  /// 0 for tau, i for xi_i; also used as the automaton edge label.
  int symbol() const { return value_; }

  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  explicit Letter(int value) : value_(value) {}
  int value_;
};

using Word = std::vector<Letter>;

/// A monomial in the variables x_{row,col} with row in 1..rows and col in N.
/// Exponents are stored sparsely keyed (col, row) so that column blocks come
/// out contiguously; an absent key means exponent zero.
class Monomial {
 public:
  explicit Monomial(int rows) : rows_(rows) {
    if (rows < 1) throw std::invalid_argument("rows must be >= 1");
  }

  int rows() const { return rows_; }
  bool is_unit() const { return exponents_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [key, e] : exponents_) d += e;
    return d;
  }

  /// Largest column index carrying a variable, -1 for the unit monomial.
  int width() const {
    return exponents_.empty() ? -1 : exponents_.rbegin()->first.first;
  }

  int exponent(int row, int col) const {
    auto it = exponents_.find({col, row});
    return it == exponents_.end() ? 0 : it->second;
  }

  void mul_var(int row, int col, int exp = 1) {
    check_row(row);
    if (col < 0) throw std::invalid_argument("column index must be >= 0");
    if (exp < 1) throw std::invalid_argument("exponent must be >= 1");
    exponents_[{col, row}] += exp;
  }

  /// Exponents in one column, indexed by row - 1.  Columns past width() are
  /// all zero, matching the infinitely many untouched columns.
  std::vector<int> column_block(int col) const {
    std::vector<int> block(rows_, 0);
    for (auto it = exponents_.lower_bound({col, 0});
         it != exponents_.end() && it->first.first == col; ++it)
      block[it->first.second - 1] = it->second;
    return block;
  }

  Monomial times(const Monomial& other) const {
    check_same_rows(other);
    Monomial out = *this;
    for (const auto& [key, e] : other.exponents_) out.exponents_[key] += e;
    return out;
  }

  /// Plain monomial divisibility, no shifting.
  bool divides(const Monomial& other) const {
    check_same_rows(other);
    for (const auto& [key, e] : exponents_) {
      auto it = other.exponents_.find(key);
      if (it == other.exponents_.end() || it->second < e) return false;
    }
    return true;
  }

  const std::map<std::pair<int, int>, int>& exponents() const {
    return exponents_;
  }

  std::string str() const;

  /// Parses "x[i,j]" / "x[i,j]^e" factors joined by '*', or the literal "1".
  /// Whitespace is ignored.  Throws std::invalid_argument on malformed input
  /// or a row index outside 1..rows.
  static Monomial parse(const std::string& text, int rows);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void check_row(int row) const {
    if (row < 1)
      throw std::invalid_argument("row index must be >= 1");
    if (row > rows_)
      throw std::invalid_argument("row index " + std::to_string(row) +
                                  " exceeds rows " + std::to_string(rows_));
  }
  void check_same_rows(const Monomial& other) const {
    if (rows_ != other.rows_)
      throw std::invalid_argument("monomials live in different row counts");
  }

  int rows_;
  std::map<std::pair<int, int>, int> exponents_;  // (col, row) -> exponent
};

/// Pushes every column index up by one: x_{i,j} -> x_{i,j+1}.
Monomial shift(const Monomial& m);

/// Evaluates a word to its monomial.  Throws if a xi index exceeds rows.
Monomial decode(const Word& w, int rows);

/// The shortest word decoding to m: standard and without trailing taus.
Word encode(const Monomial& m);

/// True when every adjacent xi pair is weakly increasing; taus break
/// adjacency.  Standard words of the same column layout are the canonical
/// representatives of their decode fibers.
bool is_standard(const Word& w);

inline int width(const Monomial& m) { return m.width(); }

/// Whether some strictly increasing column reindexing sends m onto a divisor
/// of candidate.  Decided greedily: walk the column blocks of m left to
/// right, matching each onto the earliest unused candidate column whose
/// exponent vector dominates it componentwise (empty blocks just consume a
/// column, possibly past candidate's width).
bool orbit_divides(const Monomial& m, const Monomial& candidate);

/// Membership of candidate in the ideal spanned by the shifted divisors of
/// the generators: true iff orbit_divides(g, candidate) for some g.
bool in_ideal(const Monomial& candidate, const std::vector<Monomial>& gens);

/// Debug rendering of a word: "@" for tau, "x1".."xr" for xi.
std::string to_string(const Word& w);

}  // namespace inchilb
