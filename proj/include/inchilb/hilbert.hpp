#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inchilb/automata.hpp"
#include "inchilb/genfunc.hpp"
#include "inchilb/monomial.hpp"
#include "inchilb/regex.hpp"

namespace inchilb {

/// Degree bookkeeping for the xi letters: k counting variables and one
/// nonnegative, nonzero length-k weight vector per row.  The standard total
/// grading is k = 1 with weight (1) everywhere.
struct Grading {
  int k = 1;
  std::vector<std::vector<int>> row_weights;

  static Grading standard_total(int rows);
};

struct Problem {
  int rows = 1;
  std::vector<Monomial> gens;
  Grading grading = Grading::standard_total(1);

  void validate() const;
};

struct SeriesResult {
  RationalFn series;
  int dfa_states = 0;
  std::vector<std::pair<std::string, double>> timings;  // stage -> seconds
};

/// The minimal complete DFA of the ideal's word language: union of the
/// generator patterns intersected with the standard words.  minimize=false
/// keeps the raw product automaton.
Dfa ideal_dfa(const Problem& p, bool minimize_dfa = true);

/// Exact rational Hilbert series via the automaton pipeline: ideal regex ->
/// Thompson NFA -> subset DFA -> intersect with standard words -> minimize
/// -> transfer matrices -> fraction-free elimination.  The coefficient of
/// s^n t^m counts the degree-m monomials of the ideal living in columns
/// 0..n.
SeriesResult hilbert_series(const Problem& p, bool minimize_dfa = true);

/// Independent counting oracle: enumerates every monomial on columns 0..n
/// with total degree <= dmax, tests ideal membership by greedy orbit
/// divisibility, and buckets by t-multidegree (entries with multidegree
/// total beyond dmax fall outside the table's box and are skipped).  This
/// never touches the automaton route.  brute_counts is the OpenMP kernel;
/// brute_counts_serial is the plain reference it is tested against.
CoeffTable brute_counts(const Problem& p, int nmax, int dmax);
CoeffTable brute_counts_serial(const Problem& p, int nmax, int dmax);

/// taylor(hilbert_series(p)) == brute_counts(p) on the box.
bool verify(const Problem& p, int nmax, int dmax);

}  // namespace inchilb
