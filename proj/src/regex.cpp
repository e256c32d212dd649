#include "inchilb/regex.hpp"

#include <stdexcept>

namespace inchilb {

Regex Regex::empty() {
  return Regex(std::make_shared<const Node>(Node{Kind::Empty, Letter::tau(), nullptr, nullptr}));
}

Regex Regex::epsilon() {
  return Regex(std::make_shared<const Node>(Node{Kind::Epsilon, Letter::tau(), nullptr, nullptr}));
}

Regex Regex::lit(Letter l) {
  return Regex(std::make_shared<const Node>(Node{Kind::Lit, l, nullptr, nullptr}));
}

Regex Regex::concat(Regex a, Regex b) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Concat, Letter::tau(), std::move(a.node_), std::move(b.node_)}));
}

Regex Regex::alt(Regex a, Regex b) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Union, Letter::tau(), std::move(a.node_), std::move(b.node_)}));
}

Regex Regex::star(Regex inner) {
  return Regex(std::make_shared<const Node>(
      Node{Kind::Star, Letter::tau(), std::move(inner.node_), nullptr}));
}

Regex Regex::concat_all(const std::vector<Regex>& parts) {
  if (parts.empty()) return epsilon();
  Regex out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = concat(out, parts[i]);
  return out;
}

Regex Regex::alt_all(const std::vector<Regex>& parts) {
  if (parts.empty()) return empty();
  Regex out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = alt(out, parts[i]);
  return out;
}

Letter Regex::letter() const {
  if (kind() != Kind::Lit) throw std::logic_error("letter() on non-literal");
  return node_->lit;
}

Regex Regex::left() const {
  if (kind() != Kind::Concat && kind() != Kind::Union)
    throw std::logic_error("left() on leaf node");
  return Regex(node_->a);
}

Regex Regex::right() const {
  if (kind() != Kind::Concat && kind() != Kind::Union)
    throw std::logic_error("right() on leaf node");
  return Regex(node_->b);
}

Regex Regex::inner() const {
  if (kind() != Kind::Star) throw std::logic_error("inner() on non-star");
  return Regex(node_->a);
}

Regex any_letter(int r) {
  if (r < 1) throw std::invalid_argument("alphabet needs r >= 1");
  Regex re = Regex::lit(Letter::tau());
  for (int i = 1; i <= r; ++i) re = Regex::alt(re, Regex::lit(Letter::xi(i)));
  return re;
}

Regex sigma_star(int r) { return Regex::star(any_letter(r)); }

Regex simple_standard(int r) {
  if (r < 1) throw std::invalid_argument("alphabet needs r >= 1");
  std::vector<Regex> parts;
  for (int i = 1; i <= r; ++i)
    parts.push_back(Regex::star(Regex::lit(Letter::xi(i))));
  return Regex::concat_all(parts);
}

Regex standard(int r) {
  Regex simple = simple_standard(r);
  return Regex::concat(
      simple,
      Regex::star(Regex::concat(Regex::lit(Letter::tau()), simple)));
}

Regex dominance(const Word& wi, int r) {
  if (r < 1) throw std::invalid_argument("alphabet needs r >= 1");
  if (!is_standard(wi))
    throw std::invalid_argument("dominance: word must be standard");
  std::vector<int> need(r + 1, 0);
  for (Letter l : wi) {
    if (l.is_tau())
      throw std::invalid_argument("dominance: word must be simple (no tau)");
    if (l.xi_index() > r)
      throw std::invalid_argument("dominance: xi index exceeds r");
    ++need[l.xi_index()];
  }
  std::vector<Regex> parts;
  for (int i = 1; i <= r; ++i) {
    Regex xi = Regex::lit(Letter::xi(i));
    for (int c = 0; c < need[i]; ++c) parts.push_back(xi);
    parts.push_back(Regex::star(xi));
  }
  return Regex::concat_all(parts);
}

Regex pattern(const Monomial& m) {
  const int r = m.rows();
  std::vector<Word> blocks(1);
  for (Letter l : encode(m)) {
    if (l.is_tau())
      blocks.emplace_back();
    else
      blocks.back().push_back(l);
  }
  std::vector<Regex> parts;
  parts.push_back(sigma_star(r));
  parts.push_back(dominance(blocks[0], r));
  for (size_t j = 1; j < blocks.size(); ++j) {
    parts.push_back(sigma_star(r));
    parts.push_back(Regex::lit(Letter::tau()));
    parts.push_back(dominance(blocks[j], r));
  }
  parts.push_back(sigma_star(r));
  return Regex::concat_all(parts);
}

Regex ideal_regex(const std::vector<Monomial>& gens) {
  std::vector<Regex> parts;
  parts.reserve(gens.size());
  for (const Monomial& g : gens) parts.push_back(pattern(g));
  return Regex::alt_all(parts);
}

namespace {

// precedence: union 0, concat 1, star 2, atom 3
void render(const Regex& re, int parent, std::string& out) {
  using Kind = Regex::Kind;
  int prec = 0;
  switch (re.kind()) {
    case Kind::Empty:
    case Kind::Epsilon:
    case Kind::Lit:
      prec = 3;
      break;
    case Kind::Star:
      prec = 2;
      break;
    case Kind::Concat:
      prec = 1;
      break;
    case Kind::Union:
      prec = 0;
      break;
  }
  const bool wrap = prec < parent;
  if (wrap) out += '(';
  switch (re.kind()) {
    case Kind::Empty:
      out += '0';
      break;
    case Kind::Epsilon:
      out += 'e';
      break;
    case Kind::Lit:
      out += re.letter().is_tau()
                 ? std::string("@")
                 : "x" + std::to_string(re.letter().xi_index());
      break;
    case Kind::Star:
      render(re.inner(), 3, out);
      out += '*';
      break;
    case Kind::Concat:
      render(re.left(), 1, out);
      render(re.right(), 2, out);
      break;
    case Kind::Union:
      render(re.left(), 0, out);
      out += '|';
      render(re.right(), 1, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

std::string to_text(const Regex& re) {
  std::string out;
  render(re, 0, out);
  return out;
}

}  // namespace inchilb
