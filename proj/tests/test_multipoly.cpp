#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "inchilb/genfunc.hpp"
#include "inchilb/multipoly.hpp"
#include "oracles.hpp"

using namespace inchilb;
using testutil::dfa_word_counts;
using testutil::rat_add;

namespace {

MultiPoly c(Int v) { return MultiPoly::constant(2, std::move(v)); }
MultiPoly S() { return MultiPoly::variable(2, 0); }
MultiPoly T() { return MultiPoly::variable(2, 1); }

// the worked example pieces, built structurally once and reused
MultiPoly hand_num() { return T() * T(); }
MultiPoly hand_den_factored() {
  return (c(1) - S() - T()) * (c(1) - S() - S() * T());
}
MultiPoly hand_den_expanded() {
  return c(1) - c(2) * S() - T() + S() * S() + S() * S() * T() +
         S() * T() * T();
}

TransferData hand_transfer() {
  TransferData td;
  td.letter_matrix = {{{1, 1, 0}, {0, 0, 0}, {0, 0, 1}},
                      {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}}};
  td.e1 = {1, 0, 0};
  td.u = {0, 0, 1};
  return td;
}

Int det_cofactor(const std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  Int total = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(m[i][jj]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][j] * det_cofactor(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("term order is graded with s-heavy terms first") {
  CHECK(exponent_less({0, 0}, {1, 0}));   // 1 < s
  CHECK(exponent_less({1, 0}, {0, 1}));   // s < t
  CHECK(exponent_less({0, 1}, {2, 0}));   // t < s^2
  CHECK(exponent_less({2, 0}, {1, 1}));   // s^2 < s*t
  CHECK(exponent_less({1, 1}, {0, 2}));   // s*t < t^2
  CHECK_FALSE(exponent_less({0, 1}, {1, 0}));
  const MultiPoly p = c(1) + S() + T() + S() * S() + S() * T() + T() * T();
  CHECK(p.str({"s", "t"}) == "1 + s + t + s^2 + s*t + t^2");
}

TEST_CASE("the worked denominator expands exactly") {
  CHECK(hand_den_factored() == hand_den_expanded());
  CHECK(hand_den_expanded().str({"s", "t"}) ==
        "1 - 2*s - t + s^2 + s^2*t + s*t^2");
}

TEST_CASE("ring identities hold structurally and under evaluation") {
  const MultiPoly a = c(3) - S() * T() + T() * T() * T();
  const MultiPoly b = c(1) + S() - c(2) * T();
  CHECK(a + (-a) == MultiPoly(2));
  CHECK(a * c(1) == a);
  CHECK(a * b == b * a);
  CHECK(a * (b + b) == a * b + a * b);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Int> point{Int(static_cast<int>(rng() % 19) - 9),
                                 Int(static_cast<int>(rng() % 19) - 9)};
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    CHECK((a - b).evaluate(point) == a.evaluate(point) - b.evaluate(point));
  }
}

TEST_CASE("pow and degree bookkeeping") {
  CHECK((c(1) - T()).pow(3) ==
        c(1) - c(3) * T() + c(3) * T() * T() - T() * T() * T());
  CHECK((S() + T()).pow(0) == c(1));
  CHECK(hand_den_expanded().total_degree() == 3);
  CHECK(MultiPoly(2).total_degree() == -1);
  CHECK(MultiPoly(2).is_zero());
  CHECK(hand_num().coefficient({0, 2}) == 1);
  CHECK(hand_num().coefficient({1, 0}) == 0);
  CHECK(hand_den_expanded().constant_term() == 1);
}

TEST_CASE("content is the coefficient gcd") {
  const MultiPoly p = c(6) * S() + c(-9) * T();
  CHECK(p.content() == 3);
  CHECK(p.divide_content(3) == c(2) * S() + c(-3) * T());
  CHECK(MultiPoly(2).content() == 0);
  CHECK_THROWS_AS(p.divide_content(0), std::invalid_argument);
}

TEST_CASE("exact division inverts multiplication") {
  CHECK(hand_den_factored().divide_exact(c(1) - S() - T()) ==
        c(1) - S() - S() * T());
  CHECK((c(2) * S() + c(4) * T()).divide_exact(c(2)) == S() + c(2) * T());
  const MultiPoly a = c(3) - S() * T() + T() * T() * T();
  const MultiPoly b = c(1) + S() - c(2) * T();
  CHECK((a * b).divide_exact(b) == a);
  CHECK(MultiPoly(2).divide_exact(b).is_zero());
}

TEST_CASE("inexact division throws") {
  CHECK_THROWS_AS((S() + T()).divide_exact(S()), std::logic_error);
  CHECK_THROWS_AS((S() * S() + c(1)).divide_exact(S() + c(1)),
                  std::logic_error);
  CHECK_THROWS_AS((c(3) * S()).divide_exact(c(2)), std::logic_error);
  CHECK_THROWS_AS(S().divide_exact(MultiPoly(2)), std::invalid_argument);
}

TEST_CASE("rendering omits unit coefficients and spaces latex powers") {
  CHECK((T() - S()).str({"s", "t"}) == "-s + t");
  CHECK((c(-1) * S() * S()).str({"s", "t"}) == "-s^2");
  CHECK(MultiPoly(2).str({"s", "t"}) == "0");
  CHECK(c(7).str({"s", "t"}) == "7");
  CHECK((S() * S() * T()).latex({"s", "t"}) == "s^{2} t");
  CHECK(hand_num().latex({"s", "t"}) == "t^{2}");
  CHECK_THROWS_AS(hand_num().str({"s"}), std::invalid_argument);
}

TEST_CASE("rational normalization fixes content and sign") {
  const RationalFn f = RationalFn::make(c(2) * T(), c(2) - c(2) * S());
  CHECK(f.num == T());
  CHECK(f.den == c(1) - S());

  const RationalFn g = RationalFn::make(T(), c(-1) + S());
  CHECK(g.num == -T());
  CHECK(g.den == c(1) - S());

  const RationalFn z = RationalFn::make(MultiPoly(2), c(5) - S());
  CHECK(z.num.is_zero());
  CHECK(z.den == c(1));
  CHECK(z.str({"s", "t"}) == "0");

  CHECK_THROWS_AS(RationalFn::make(T(), MultiPoly(2)), std::invalid_argument);
  CHECK_THROWS_AS(RationalFn::make(T(), S()), std::invalid_argument);
}

TEST_CASE("cross-multiplication equality ignores common factors") {
  const RationalFn f = RationalFn::make(hand_num(), hand_den_factored());
  const RationalFn g = RationalFn::make(hand_num() * (c(1) + S()),
                                        hand_den_expanded() * (c(1) + S()));
  CHECK(rat_eq(f, g));
  CHECK(rat_eq(RationalFn::make(MultiPoly(2), c(1)),
               RationalFn::make(MultiPoly(2), c(1) - S())));
  CHECK_FALSE(rat_eq(RationalFn::make(c(1), c(1) - S() - T()),
                     RationalFn::make(c(1), c(1) - S())));
}

TEST_CASE("bareiss determinant on numeric matrices") {
  auto as_poly = [](const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<MultiPoly>> out;
    for (const auto& row : m) {
      std::vector<MultiPoly> prow;
      for (const Int& v : row) prow.push_back(MultiPoly::constant(2, v));
      out.push_back(std::move(prow));
    }
    return out;
  };

  CHECK(bareiss_determinant(as_poly({{2, 3}, {4, 5}})) == c(-2));
  CHECK(bareiss_determinant(as_poly({{0, 1}, {1, 0}})) == c(-1));
  CHECK(bareiss_determinant(as_poly({{1, 1}, {1, 1}})).is_zero());
  CHECK(bareiss_determinant({{c(7)}}) == c(7));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    for (auto& row : m)
      for (Int& v : row) v = static_cast<int>(rng() % 11) - 5;
    CHECK(bareiss_determinant(as_poly(m)) ==
          MultiPoly::constant(2, det_cofactor(m)));
  }
}

TEST_CASE("bareiss determinant on the worked symbolic matrix") {
  // B = I - s*M_tau - t*M_xi for the worked 3-state machine
  const std::vector<std::vector<MultiPoly>> b{
      {c(1) - S(), -S(), MultiPoly(2)},
      {-T(), c(1), MultiPoly(2)},
      {MultiPoly(2), -T(), c(1) - S() - T()}};
  CHECK(bareiss_determinant(b) == hand_den_factored());
}

TEST_CASE("bareiss determinant input validation") {
  CHECK_THROWS_AS(bareiss_determinant({{c(1), c(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(bareiss_determinant({}), std::invalid_argument);
}

TEST_CASE("weight assignments map tau to s and xi to t-monomials") {
  const WeightAssignment std1 = WeightAssignment::standard(2);
  CHECK(std1.k == 1);
  CHECK(std1.letters() == 3);
  CHECK(std1.letter_weight(0) == MultiPoly::variable(2, 0));
  CHECK(std1.letter_weight(1) == MultiPoly::variable(2, 1));
  CHECK(std1.letter_weight(2) == MultiPoly::variable(2, 1));

  const WeightAssignment multi =
      WeightAssignment::multigraded({{1, 0}, {0, 1}});
  CHECK(multi.k == 2);
  CHECK(multi.nvars() == 3);
  CHECK(multi.letter_weight(1) == MultiPoly::monomial(3, {0, 1, 0}));
  CHECK(multi.letter_weight(2) == MultiPoly::monomial(3, {0, 0, 1}));

  CHECK_THROWS_AS(WeightAssignment::multigraded({{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightAssignment::multigraded({{1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightAssignment::multigraded({{1, -1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightAssignment::multigraded({}), std::invalid_argument);
}

TEST_CASE("genfunc reproduces the worked example series exactly") {
  const RationalFn h = genfunc(hand_transfer(), WeightAssignment::standard(1));
  CHECK(h.num == hand_num());
  CHECK(h.den == hand_den_expanded());
  CHECK(h.str({"s", "t"}) ==
        "(t^2)/(1 - 2*s - t + s^2 + s^2*t + s*t^2)");
  CHECK(rat_eq(h, RationalFn::make(hand_num(), hand_den_factored())));
}

TEST_CASE("genfunc degenerate machines") {
  TransferData none = hand_transfer();
  none.u = {0, 0, 0};
  const RationalFn zero = genfunc(none, WeightAssignment::standard(1));
  CHECK(zero.num.is_zero());
  CHECK(zero.den == c(1));

  TransferData loop;
  loop.letter_matrix = {{{1}}, {{1}}};
  loop.e1 = {1};
  loop.u = {1};
  const RationalFn all = genfunc(loop, WeightAssignment::standard(1));
  CHECK(rat_eq(all, RationalFn::make(c(1), c(1) - S() - T())));
}

TEST_CASE("genfunc validates dimensions") {
  TransferData bad = hand_transfer();
  bad.e1 = {1, 0};
  CHECK_THROWS_AS(genfunc(bad, WeightAssignment::standard(1)),
                  std::invalid_argument);
  TransferData wrong_letters = hand_transfer();
  wrong_letters.letter_matrix.pop_back();
  CHECK_THROWS_AS(genfunc(wrong_letters, WeightAssignment::standard(2)),
                  std::invalid_argument);
}

TEST_CASE("genfunc is additive over disjoint accept sets") {
  const WeightAssignment wt = WeightAssignment::standard(1);
  TransferData td = hand_transfer();
  RationalFn total = RationalFn::make(MultiPoly(2), c(1));
  for (int i = 0; i < 3; ++i) {
    td.u = {0, 0, 0};
    td.u[i] = 1;
    total = rat_add(total, genfunc(td, wt));
  }
  td.u = {1, 1, 1};
  CHECK(rat_eq(total, genfunc(td, wt)));
}

TEST_CASE("coefficient tables drop zero entries") {
  CoeffTable t;
  t.add(1, {2}, 5);
  CHECK(t.at(1, {2}) == 5);
  CHECK(t.at(0, {0}) == 0);
  t.add(1, {2}, -5);
  CHECK(t == CoeffTable{});

  CoeffTable a, b;
  a.add(0, {1}, 2);
  b.add(0, {1}, 3);
  b.add(2, {0}, 1);
  a.merge(b);
  CHECK(a.at(0, {1}) == 5);
  CHECK(a.at(2, {0}) == 1);
}

TEST_CASE("taylor on the worked series gives the counted coefficients") {
  const RationalFn h = genfunc(hand_transfer(), WeightAssignment::standard(1));
  const CoeffTable t = taylor(h, 2, 4);
  CHECK(t.at(0, {2}) == 1);
  CHECK(t.at(1, {2}) == 2);
  CHECK(t.at(1, {3}) == 4);
  CHECK(t.at(1, {4}) == 5);
  CHECK(t.at(0, {0}) == 0);
  CHECK(t.at(0, {1}) == 0);
  CHECK(t.at(2, {2}) == 3);
}

TEST_CASE("taylor of a geometric series gives binomials") {
  const RationalFn geo = RationalFn::make(c(1), c(1) - S() - T());
  const CoeffTable t = taylor(geo, 4, 4);
  auto binom = [](int n, int k) {
    Int v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(t.at(n, {m}) == binom(n + m, m));
}

TEST_CASE("taylor handles zero and sparse denominators") {
  CHECK(taylor(RationalFn::make(MultiPoly(2), c(1)), 3, 3) == CoeffTable{});

  const RationalFn f = RationalFn::make(c(1), c(1) - S() * T() * T());
  const CoeffTable t = taylor(f, 3, 6);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 6; ++m)
      CHECK(t.at(n, {m}) == ((m == 2 * n) ? 1 : 0));
}

TEST_CASE("taylor rejects non-integral series") {
  CHECK_THROWS_AS(taylor(RationalFn::make(T(), c(2) - S()), 2, 2),
                  std::domain_error);
}

TEST_CASE("taylor tables match direct word counts for small machines") {
  // symbolic route: transfer matrices, Bareiss elimination, series division;
  // counting route: enumerate every word and run the automaton
  using testutil::w_;
  const Dfa machines[] = {
      minimize(determinize(thompson(pattern(Monomial::parse("x[1,0]^2", 1)), 1))),
      minimize(determinize(thompson(standard(2), 2))),
      minimize(intersect(
          determinize(thompson(pattern(Monomial::parse("x[1,1]*x[2,0]", 2)), 2)),
          determinize(thompson(standard(2), 2)))),
  };
  for (const Dfa& d : machines) {
    const WeightAssignment wt = WeightAssignment::standard(d.letters - 1);
    const RationalFn h = genfunc(transition_matrices(d), wt);
    CHECK(taylor(h, 4, 5) == dfa_word_counts(d, wt, 4, 5));
  }

  const WeightAssignment multi =
      WeightAssignment::multigraded({{1, 0}, {0, 1}});
  const Dfa& d = machines[2];
  const RationalFn h = genfunc(transition_matrices(d), multi);
  CHECK(taylor(h, 3, 4) == dfa_word_counts(d, multi, 3, 4));
}
