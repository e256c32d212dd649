#include "inchilb/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace inchilb {

namespace {

struct ThompsonBuilder {
  Nfa nfa;

  int add_state() { return nfa.state_count++; }
  void edge(int from, int label, int to) {
    nfa.transitions.push_back({from, label, to});
  }

  // returns (start, accept) of the fragment
  std::pair<int, int> build(const Regex& re) {
    using Kind = Regex::Kind;
    switch (re.kind()) {
      case Kind::Empty: {
        int s = add_state(), a = add_state();
        return {s, a};
      }
      case Kind::Epsilon: {
        int s = add_state(), a = add_state();
        edge(s, kEpsilon, a);
        return {s, a};
      }
      case Kind::Lit: {
        int symbol = re.letter().symbol();
        if (symbol >= nfa.letters)
          throw std::invalid_argument("literal letter outside the alphabet");
        int s = add_state(), a = add_state();
        edge(s, symbol, a);
        return {s, a};
      }
      case Kind::Concat: {
        auto [s1, a1] = build(re.left());
        auto [s2, a2] = build(re.right());
        edge(a1, kEpsilon, s2);
        return {s1, a2};
      }
      case Kind::Union: {
        auto [s1, a1] = build(re.left());
        auto [s2, a2] = build(re.right());
        int s = add_state(), a = add_state();
        edge(s, kEpsilon, s1);
        edge(s, kEpsilon, s2);
        edge(a1, kEpsilon, a);
        edge(a2, kEpsilon, a);
        return {s, a};
      }
      case Kind::Star: {
        auto [s1, a1] = build(re.inner());
        int s = add_state(), a = add_state();
        edge(s, kEpsilon, s1);
        edge(s, kEpsilon, a);
        edge(a1, kEpsilon, s1);
        edge(a1, kEpsilon, a);
        return {s, a};
      }
    }
    throw std::logic_error("unreachable regex kind");
  }
};

// breadth-first renumbering from the start state; unreachable states drop out
Dfa canonical_reachable(const Dfa& d) {
  std::vector<int> id(d.state_count, -1);
  std::vector<int> order;
  std::queue<int> work;
  id[d.start] = 0;
  order.push_back(d.start);
  work.push(d.start);
  while (!work.empty()) {
    int s = work.front();
    work.pop();
    for (int l = 0; l < d.letters; ++l) {
      int t = d.delta[s][l];
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
        work.push(t);
      }
    }
  }
  Dfa out;
  out.letters = d.letters;
  out.state_count = static_cast<int>(order.size());
  out.start = 0;
  out.accept.resize(out.state_count);
  out.delta.assign(out.state_count, std::vector<int>(d.letters, 0));
  for (int s = 0; s < out.state_count; ++s) {
    int old = order[s];
    out.accept[s] = d.accept[old];
    for (int l = 0; l < d.letters; ++l) out.delta[s][l] = id[d.delta[old][l]];
  }
  return out;
}

}  // namespace

Nfa thompson(const Regex& re, int r) {
  if (r < 1) throw std::invalid_argument("thompson: r must be >= 1");
  ThompsonBuilder builder;
  builder.nfa.letters = r + 1;
  auto [start, accept] = builder.build(re);
  builder.nfa.start = start;
  builder.nfa.accepts = {accept};
  return std::move(builder.nfa);
}

Dfa determinize(const Nfa& nfa) {
  std::vector<std::vector<int>> eps(nfa.state_count);
  std::vector<std::vector<std::vector<int>>> step(
      nfa.letters, std::vector<std::vector<int>>(nfa.state_count));
  for (const NfaTransition& t : nfa.transitions) {
    if (t.label == kEpsilon)
      eps[t.from].push_back(t.to);
    else
      step[t.label][t.from].push_back(t.to);
  }

  auto closure = [&](const std::vector<int>& seed) {
    std::vector<char> in(nfa.state_count, 0);
    std::vector<int> stack = seed;
    for (int s : seed) in[s] = 1;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t : eps[s])
        if (!in[t]) {
          in[t] = 1;
          stack.push_back(t);
        }
    }
    std::vector<int> out;
    for (int s = 0; s < nfa.state_count; ++s)
      if (in[s]) out.push_back(s);
    return out;
  };

  Dfa d;
  d.letters = nfa.letters;
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  std::queue<int> work;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] =
        id.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      d.delta.emplace_back(d.letters, -1);
      bool acc = false;
      for (int s : it->first) acc = acc || nfa.accepts.count(s);
      d.accept.push_back(acc);
      work.push(it->second);
    }
    return it->second;
  };

  d.start = intern(closure({nfa.start}));
  while (!work.empty()) {
    int s = work.front();
    work.pop();
    std::vector<int> subset = subsets[s];  // delta may reallocate subsets
    for (int l = 0; l < d.letters; ++l) {
      std::vector<char> in(nfa.state_count, 0);
      std::vector<int> moved;
      for (int q : subset)
        for (int t : step[l][q])
          if (!in[t]) {
            in[t] = 1;
            moved.push_back(t);
          }
      std::sort(moved.begin(), moved.end());
      d.delta[s][l] = intern(closure(moved));
    }
  }
  d.state_count = static_cast<int>(subsets.size());
  return d;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.letters != b.letters)
    throw std::invalid_argument("intersect: alphabets differ");
  Dfa out;
  out.letters = a.letters;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  std::queue<int> work;
  auto intern = [&](std::pair<int, int> pq) {
    auto [it, fresh] = id.try_emplace(pq, static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.push_back(pq);
      out.delta.emplace_back(out.letters, -1);
      out.accept.push_back(a.accept[pq.first] && b.accept[pq.second]);
      work.push(it->second);
    }
    return it->second;
  };
  out.start = intern({a.start, b.start});
  while (!work.empty()) {
    int s = work.front();
    work.pop();
    auto [p, q] = pairs[s];
    for (int l = 0; l < out.letters; ++l)
      out.delta[s][l] = intern({a.delta[p][l], b.delta[q][l]});
  }
  out.state_count = static_cast<int>(pairs.size());
  return out;
}

Dfa minimize(const Dfa& d) {
  Dfa r = canonical_reachable(d);
  const int n = r.state_count;

  std::vector<int> color(n);
  int colors;
  {
    std::map<int, int> seen;
    for (int s = 0; s < n; ++s) {
      auto it = seen.try_emplace(r.accept[s] ? 1 : 0,
                                 static_cast<int>(seen.size()))
                    .first;
      color[s] = it->second;
    }
    colors = static_cast<int>(seen.size());
  }

  while (true) {
    std::map<std::vector<int>, int> signature_id;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(r.letters + 1);
      sig.push_back(color[s]);
      for (int l = 0; l < r.letters; ++l) sig.push_back(color[r.delta[s][l]]);
      auto it = signature_id
                    .try_emplace(std::move(sig),
                                 static_cast<int>(signature_id.size()))
                    .first;
      next[s] = it->second;
    }
    int refined = static_cast<int>(signature_id.size());
    color = std::move(next);
    if (refined == colors) break;
    colors = refined;
  }

  Dfa q;
  q.letters = r.letters;
  q.state_count = colors;
  q.start = color[r.start];
  q.accept.assign(colors, 0);
  q.delta.assign(colors, std::vector<int>(r.letters, 0));
  for (int s = 0; s < n; ++s) {
    int c = color[s];
    q.accept[c] = r.accept[s];
    for (int l = 0; l < r.letters; ++l) q.delta[c][l] = color[r.delta[s][l]];
  }
  return canonical_reachable(q);
}

bool accepts(const Dfa& d, const Word& w) {
  int s = d.start;
  for (Letter l : w) {
    if (l.symbol() >= d.letters)
      throw std::invalid_argument("word letter outside the DFA alphabet");
    s = d.delta[s][l.symbol()];
  }
  return d.accept[s];
}

TransferData transition_matrices(const Dfa& d) {
  const int n = d.state_count;
  TransferData out;
  out.letter_matrix.assign(
      d.letters, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < d.letters; ++l) out.letter_matrix[l][d.delta[j][l]][j] = 1;
  out.e1.assign(n, 0);
  out.e1[d.start] = 1;
  out.u.assign(n, 0);
  for (int s = 0; s < n; ++s)
    if (d.accept[s]) out.u[s] = 1;
  return out;
}

namespace {

std::string label_name(int label) {
  return label == 0 ? std::string("t") : "x" + std::to_string(label);
}

}  // namespace

std::string to_dot(const Dfa& d) {
  std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  __start [shape=none, label=\"\"];\n";
  for (int s = 0; s < d.state_count; ++s)
    if (d.accept[s])
      out += "  s" + std::to_string(s) + " [shape=doublecircle];\n";
  out += "  __start -> s" + std::to_string(d.start) + ";\n";
  for (int s = 0; s < d.state_count; ++s)
    for (int l = 0; l < d.letters; ++l)
      out += "  s" + std::to_string(s) + " -> s" +
             std::to_string(d.delta[s][l]) + " [label=\"" + label_name(l) +
             "\"];\n";
  out += "}\n";
  return out;
}

std::string to_dot(const Nfa& n) {
  std::string out = "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  __start [shape=none, label=\"\"];\n";
  for (int s : n.accepts)
    out += "  s" + std::to_string(s) + " [shape=doublecircle];\n";
  out += "  __start -> s" + std::to_string(n.start) + ";\n";
  for (const NfaTransition& t : n.transitions)
    out += "  s" + std::to_string(t.from) + " -> s" + std::to_string(t.to) +
           " [label=\"" +
           (t.label == kEpsilon ? std::string("eps") : label_name(t.label)) +
           "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace inchilb
