#include "inchilb/hilbert.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inchilb {

namespace {

using Clock = std::chrono::steady_clock;
using Timings = std::vector<std::pair<std::string, double>>;

struct StageTimer {
  Timings* sink;
  Clock::time_point last = Clock::now();

  void mark(const char* stage) {
    if (!sink) return;
    Clock::time_point now = Clock::now();
    sink->emplace_back(stage, std::chrono::duration<double>(now - last).count());
    last = now;
  }
};

Dfa pipeline_dfa(const Problem& p, bool minimize_dfa, Timings* timings) {
  StageTimer timer{timings};
  Regex re = ideal_regex(p.gens);
  timer.mark("regex");
  Nfa nfa = thompson(re, p.rows);
  timer.mark("thompson");
  Dfa raw = determinize(nfa);
  Dfa standard_words = determinize(thompson(standard(p.rows), p.rows));
  timer.mark("determinize");
  Dfa product = intersect(raw, standard_words);
  timer.mark("intersect");
  if (minimize_dfa) {
    product = minimize(product);
    timer.mark("minimize");
  }
  return product;
}

Monomial from_exponents(const std::vector<int>& exps, int rows) {
  Monomial m(rows);
  for (size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0)
      m.mul_var(static_cast<int>(v) % rows + 1, static_cast<int>(v) / rows,
                exps[v]);
  return m;
}

// bucket one enumerated candidate; the enumeration budget bounds the plain
// total degree, which dominates every multidegree total, so the dmax filter
// here is the only extra cut needed
void consider(const Problem& p, int n, const std::vector<int>& exps, int dmax,
              CoeffTable& table) {
  const int k = p.grading.k;
  std::vector<int> multidegree(k, 0);
  for (size_t v = 0; v < exps.size(); ++v) {
    const int e = exps[v];
    if (e == 0) continue;
    const auto& w = p.grading.row_weights[v % p.rows];
    for (int c = 0; c < k; ++c) multidegree[c] += e * w[c];
  }
  int total = 0;
  for (int c = 0; c < k; ++c) total += multidegree[c];
  if (total > dmax) return;
  if (in_ideal(from_exponents(exps, p.rows), p.gens))
    table.add(n, std::move(multidegree), 1);
}

template <typename Fn>
void enumerate_rest(std::vector<int>& exps, size_t v, int budget, Fn&& leaf) {
  if (v == exps.size()) {
    leaf(exps);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    exps[v] = e;
    enumerate_rest(exps, v + 1, budget - e, leaf);
  }
  exps[v] = 0;
}

void check_bounds(int nmax, int dmax) {
  if (nmax < 0 || dmax < 0)
    throw std::invalid_argument("count bounds must be >= 0");
}

}  // namespace

Grading Grading::standard_total(int rows) {
  return Grading{1, std::vector<std::vector<int>>(rows, {1})};
}

void Problem::validate() const {
  if (rows < 1) throw std::invalid_argument("problem needs rows >= 1");
  for (const Monomial& g : gens)
    if (g.rows() != rows)
      throw std::invalid_argument("generator row count differs from problem");
  if (static_cast<int>(grading.row_weights.size()) != rows)
    throw std::invalid_argument("grading needs one weight vector per row");
  WeightAssignment::multigraded(grading.row_weights);  // validity check only
  if (grading.k != static_cast<int>(grading.row_weights[0].size()))
    throw std::invalid_argument("grading k does not match its weight vectors");
}

Dfa ideal_dfa(const Problem& p, bool minimize_dfa) {
  p.validate();
  return pipeline_dfa(p, minimize_dfa, nullptr);
}

SeriesResult hilbert_series(const Problem& p, bool minimize_dfa) {
  p.validate();
  Timings timings;
  Dfa dfa = pipeline_dfa(p, minimize_dfa, &timings);
  StageTimer timer{&timings};
  TransferData td = transition_matrices(dfa);
  timer.mark("matrices");
  WeightAssignment wt = WeightAssignment::multigraded(p.grading.row_weights);
  RationalFn series = genfunc(td, wt);
  timer.mark("genfunc");
  return SeriesResult{std::move(series), dfa.state_count, std::move(timings)};
}

CoeffTable brute_counts_serial(const Problem& p, int nmax, int dmax) {
  p.validate();
  check_bounds(nmax, dmax);
  CoeffTable table;
  table.k = p.grading.k;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<int> exps(static_cast<size_t>(p.rows) * (n + 1), 0);
    enumerate_rest(exps, 0, dmax, [&](const std::vector<int>& e) {
      consider(p, n, e, dmax, table);
    });
  }
  return table;
}

CoeffTable brute_counts(const Problem& p, int nmax, int dmax) {
  p.validate();
  check_bounds(nmax, dmax);

  // one task per (n, exponent of the first variable): independent counting
  // jobs that merge by addition
  std::vector<std::pair<int, int>> tasks;
  for (int n = 0; n <= nmax; ++n)
    for (int e0 = 0; e0 <= dmax; ++e0) tasks.emplace_back(n, e0);

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::vector<CoeffTable> locals(threads);
  for (CoeffTable& t : locals) t.k = p.grading.k;

#pragma omp parallel for schedule(dynamic)
  for (int ti = 0; ti < static_cast<int>(tasks.size()); ++ti) {
#ifdef _OPENMP
    CoeffTable& local = locals[omp_get_thread_num()];
#else
    CoeffTable& local = locals[0];
#endif
    const auto [n, e0] = tasks[ti];
    std::vector<int> exps(static_cast<size_t>(p.rows) * (n + 1), 0);
    exps[0] = e0;
    enumerate_rest(exps, 1, dmax - e0, [&](const std::vector<int>& e) {
      consider(p, n, e, dmax, local);
    });
  }

  CoeffTable table;
  table.k = p.grading.k;
  for (const CoeffTable& local : locals) table.merge(local);
  return table;
}

bool verify(const Problem& p, int nmax, int dmax) {
  SeriesResult result = hilbert_series(p);
  return taylor(result.series, nmax, dmax) == brute_counts(p, nmax, dmax);
}

}  // namespace inchilb
