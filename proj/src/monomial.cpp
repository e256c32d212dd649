#include "inchilb/monomial.hpp"

#include <cctype>

namespace inchilb {

std::string Monomial::str() const {
  if (exponents_.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [key, e] : exponents_) {
    if (!first) out += '*';
    first = false;
    out += "x[" + std::to_string(key.second) + "," +
           std::to_string(key.first) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial Monomial::parse(const std::string& text, int rows) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty monomial");

  Monomial m(rows);
  if (s == "1") return m;

  size_t pos = 0;
  auto read_int = [&](const char* what) -> int {
    size_t begin = pos;
    long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      if (value > 1000000)
        throw std::invalid_argument(std::string(what) + " out of range");
      ++pos;
    }
    if (pos == begin)
      throw std::invalid_argument(std::string("expected ") + what +
                                  " at position " + std::to_string(begin));
    return static_cast<int>(value);
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c +
                                  "' at position " + std::to_string(pos));
    ++pos;
  };

  while (true) {
    expect('x');
    expect('[');
    int row = read_int("row index");
    expect(',');
    int col = read_int("column index");
    expect(']');
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      exp = read_int("exponent");
      if (exp < 1) throw std::invalid_argument("exponent must be >= 1");
    }
    if (row < 1) throw std::invalid_argument("row index must be >= 1");
    if (row > rows)
      throw std::invalid_argument("row index " + std::to_string(row) +
                                  " exceeds rows " + std::to_string(rows));
    m.mul_var(row, col, exp);
    if (pos == s.size()) break;
    expect('*');
  }
  return m;
}

Monomial shift(const Monomial& m) {
  Monomial out(m.rows());
  for (const auto& [key, e] : m.exponents())
    out.mul_var(key.second, key.first + 1, e);
  return out;
}

Monomial decode(const Word& w, int rows) {
  Monomial m(rows);
  int col = 0;
  for (Letter l : w) {
    if (l.is_tau()) {
      ++col;
    } else {
      if (l.xi_index() > rows)
        throw std::invalid_argument("xi index " +
                                    std::to_string(l.xi_index()) +
                                    " exceeds rows " + std::to_string(rows));
      m.mul_var(l.xi_index(), col);
    }
  }
  return m;
}

Word encode(const Monomial& m) {
  Word w;
  int col = 0;
  // (col, row) iteration order emits columns ascending, rows ascending
  // within a column: standard by construction, and the final block is the
  // widest nonempty column, so no trailing taus appear.
  for (const auto& [key, e] : m.exponents()) {
    while (col < key.first) {
      w.push_back(Letter::tau());
      ++col;
    }
    for (int i = 0; i < e; ++i) w.push_back(Letter::xi(key.second));
  }
  return w;
}

bool is_standard(const Word& w) {
  int last_xi = 0;  // 0: no xi immediately before
  for (Letter l : w) {
    if (l.is_tau()) {
      last_xi = 0;
    } else {
      if (last_xi > l.xi_index()) return false;
      last_xi = l.xi_index();
    }
  }
  return true;
}

namespace {

bool dominated(const std::vector<int>& block, const std::vector<int>& by) {
  for (size_t i = 0; i < block.size(); ++i)
    if (by[i] < block[i]) return false;
  return true;
}

bool block_empty(const std::vector<int>& block) {
  for (int e : block)
    if (e != 0) return false;
  return true;
}

}  // namespace

bool orbit_divides(const Monomial& m, const Monomial& candidate) {
  if (m.rows() != candidate.rows())
    throw std::invalid_argument("orbit_divides: row counts differ");
  const int mw = m.width();
  const int cw = candidate.width();
  int next = 0;  // earliest candidate column not yet consumed
  for (int j = 0; j <= mw; ++j) {
    std::vector<int> block = m.column_block(j);
    if (block_empty(block)) {
      // any column works, including the all-zero ones past cw
      ++next;
      continue;
    }
    int found = -1;
    for (int c = next; c <= cw; ++c) {
      if (dominated(block, candidate.column_block(c))) {
        found = c;
        break;
      }
    }
    if (found < 0) return false;
    next = found + 1;
  }
  return true;
}

bool in_ideal(const Monomial& candidate, const std::vector<Monomial>& gens) {
  for (const Monomial& g : gens)
    if (orbit_divides(g, candidate)) return true;
  return false;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter l : w)
    out += l.is_tau() ? std::string("@") : "x" + std::to_string(l.xi_index());
  return out;
}

}  // namespace inchilb
