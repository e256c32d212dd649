#pragma once

#include <memory>
#include <string>
#include <vector>

#include "inchilb/monomial.hpp"

namespace inchilb {

/// Immutable regular-expression syntax tree over the letter alphabet.
/// Constructors build the tree literally; no simplification is performed, so
/// the automata stages see exactly what the language layer wrote.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Lit, Concat, Union, Star };

  static Regex empty();
  static Regex epsilon();
  static Regex lit(Letter l);
  static Regex concat(Regex a, Regex b);
  static Regex alt(Regex a, Regex b);
  static Regex star(Regex inner);

  /// Left folds; the empty fold is epsilon (concat) or empty (alt).
  static Regex concat_all(const std::vector<Regex>& parts);
  static Regex alt_all(const std::vector<Regex>& parts);

  Kind kind() const { return node_->kind; }
  Letter letter() const;  // Lit only
  Regex left() const;     // Concat, Union
  Regex right() const;    // Concat, Union
  Regex inner() const;    // Star

  /// Stable node identity, usable as a memoization key.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    Letter lit = Letter::tau();
    std::shared_ptr<const Node> a, b;
  };
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// tau | xi_1 | ... | xi_r.
Regex any_letter(int r);
Regex sigma_star(int r);

/// xi_1^* xi_2^* ... xi_r^*: the simple standard words.
Regex simple_standard(int r);

/// L (tau L)^* with L = simple_standard(r): all standard words.
Regex standard(int r);

/// For a simple standard word with a_k copies of xi_k, the words
/// xi_1^{b_1} ... xi_r^{b_r} with b_k >= a_k, as xi_k^{a_k} xi_k^* factors.
/// Throws if the word contains tau, is not standard, or uses xi past r.
Regex dominance(const Word& wi, int r);

/// The pattern language of m: with encode(m) = w_0 tau w_1 tau ... tau w_n,
/// this is S* D(w_0) S* tau D(w_1) S* tau ... tau D(w_n) S* where S = any
/// letter and D = dominance.  A standard word lies in it iff its decoded
/// monomial is orbit-divisible by m.
Regex pattern(const Monomial& m);

/// Union of the generator patterns; the empty union is the empty language.
Regex ideal_regex(const std::vector<Monomial>& gens);

/// Debug rendering: '|', juxtaposition, '*', parentheses, '@' for tau,
/// "x1".."xr" for xi, '0' for the empty language, 'e' for epsilon.
std::string to_text(const Regex& re);

}  // namespace inchilb
