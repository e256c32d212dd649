#pragma once

#include <set>
#include <string>
#include <vector>

#include "inchilb/monomial.hpp"
#include "inchilb/regex.hpp"

namespace inchilb {

inline constexpr int kEpsilon = -1;

struct NfaTransition {
  int from;
  int label;  // kEpsilon, or a letter symbol in 0..letters-1
  int to;
  friend bool operator==(const NfaTransition&, const NfaTransition&) = default;
};

struct Nfa {
  int letters = 1;  // alphabet size r + 1; label 0 is tau
  int state_count = 0;
  int start = 0;
  std::set<int> accepts;
  std::vector<NfaTransition> transitions;
};

/// Complete deterministic automaton: delta[state][label] is always a valid
/// state id.  States are numbered in breadth-first order from the start
/// (labels scanned ascending), which makes construction output reproducible.
struct Dfa {
  int letters = 1;
  int state_count = 0;
  int start = 0;
  std::vector<char> accept;             // indexed by state
  std::vector<std::vector<int>> delta;  // [state][label]
  friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Thompson construction; two fresh states per node, epsilon glue.
/// Throws if a literal's symbol lies outside the alphabet for this r.
Nfa thompson(const Regex& re, int r);

/// Subset construction over epsilon closures.  Reachable subsets only; the
/// empty subset acts as the non-accepting sink that completes delta.
Dfa determinize(const Nfa& nfa);

/// Product automaton of the reachable pairs.  Alphabets must agree.
Dfa intersect(const Dfa& a, const Dfa& b);

/// Language-equivalent complete DFA with the minimum number of states:
/// reachable restriction followed by partition refinement to a fixpoint.
Dfa minimize(const Dfa& d);

bool accepts(const Dfa& d, const Word& w);

/// Per-letter 0-1 matrices M with M[i][j] = 1 iff delta[j][label] == i
/// (columns index the source state), the start indicator e1 and the accept
/// indicator u.  Every column of every matrix sums to one: each state has
/// exactly one outgoing edge per letter.
struct TransferData {
  std::vector<std::vector<std::vector<int>>> letter_matrix;
  std::vector<int> e1;
  std::vector<int> u;
};
TransferData transition_matrices(const Dfa& d);

/// Graphviz dumps; edge labels "t" for tau and "x1".."xr" for xi, accepting
/// states drawn with doubled circles, one edge per transition.
std::string to_dot(const Dfa& d);
std::string to_dot(const Nfa& n);

}  // namespace inchilb
