#include "doctest.h"

#include "eforder/golden.hpp"
#include "eforder/quasipoly.hpp"

using namespace eforder;

TEST_SUITE_BEGIN("quasipoly");

TEST_CASE("gcd expressions merge, evaluate, and cancel") {
  GcdExpression a = GcdExpression::monomial(1, 1, {Int(2)});  // m*gcd(2,m)
  CHECK(a.evaluate(4) == 8);
  CHECK(a.evaluate(3) == 3);
  GcdExpression b = a;
  b *= Rat(-1);
  GcdExpression c = a + b;
  CHECK(c.is_zero());
  GcdExpression d = GcdExpression::monomial(Rat(1, 2), 0, {Int(3), Int(1)}) +
                    GcdExpression::monomial(Rat(1, 2), 0, {Int(3)});
  CHECK(d.terms().size() == 1);  // gcd(1,m) factor dropped, terms merged
  CHECK(d.evaluate(6) == 3);
  CHECK(d.evaluate(2) == 1);
  CHECK(d.divisor_lcm() == 3);
  CHECK_THROWS_AS((void)GcdExpression::monomial(Rat(1, 2), 0, {}).evaluate(5),
                  DataIntegrityError);
}

TEST_CASE("fit reconstructs a constant and verifies held-out samples") {
  QuasiPolynomial one = fit([](long) { return Int(1); }, 0, 1);
  CHECK(one.period == 1);
  CHECK(evaluate(one, 17) == 1);

  // A sampler that is not degree-0 must be rejected.
  CHECK_THROWS_AS((void)fit([](long m) { return Int(m); }, 0, 1), FitError);
}

TEST_CASE("detect_period finds minimal periods") {
  GcdExpression a = GcdExpression::monomial(1, 1, {Int(2)});
  CHECK(detect_period(a) == 2);
  CHECK(detect_period(GcdExpression::constant(5)) == 1);
  // Spurious divisor that cancels back to a plain polynomial.
  GcdExpression b = GcdExpression::monomial(1, 1, {Int(6)}) -
                    GcdExpression::monomial(1, 1, {Int(6)}) +
                    GcdExpression::monomial(2, 1, {});
  CHECK(detect_period(b) == 1);
  // gcd(4,m) has period 4, not 2.
  CHECK(detect_period(GcdExpression::monomial(1, 0, {Int(4)})) == 4);
}

TEST_CASE("quasipoly expansion of a symbolic count") {
  // m * gcd(2, m): 2m on evens, m on odds.
  QuasiPolynomial qp = quasipoly_from_expr(GcdExpression::monomial(1, 1, {Int(2)}), 1);
  REQUIRE(qp.period == 2);
  CHECK(qp.at_residue(0) == Polynomial{{0, 2}});
  CHECK(qp.at_residue(1) == Polynomial{{0, 1}});
}

TEST_CASE("golden N(G,m) tables load and evaluate") {
  QuasiPolynomial g2 = golden_ngm(GroupType::G2);
  CHECK(g2.period == 6);
  CHECK(evaluate(g2, 6) == 7);
  CHECK(evaluate(g2, 12) == 19);
  CHECK(evaluate(g2, 1) == 1);
  QuasiPolynomial f4 = golden_ngm(GroupType::F4);
  CHECK(evaluate(f4, 2) == 3);
  QuasiPolynomial e8 = golden_ngm(GroupType::E8);
  CHECK(e8.period == 60);
  CHECK(evaluate(e8, 1) == 1);
  CHECK(evaluate(e8, 2) == 3);
}

TEST_CASE("json emission round-trips") {
  QuasiPolynomial g2 = golden_ngm(GroupType::G2);
  std::string text = emit_table(g2, TableFormat::kJson);
  QuasiPolynomial back = quasipoly_from_json(text);
  CHECK(back == g2);
}

TEST_CASE("markdown rendering groups residues") {
  QuasiPolynomial g2 = golden_ngm(GroupType::G2);
  std::string md = emit_table(g2, TableFormat::kMarkdown);
  CHECK(md.find("(m^2+6m+12)/12") != std::string::npos);
  CHECK(md.find("| 1,5 |") != std::string::npos);
  // Four distinct residue rows, as in the published table.
  size_t rows = 0;
  for (size_t p = md.find("\n| "); p != std::string::npos; p = md.find("\n| ", p + 1)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("golden eigenvalue tables load") {
  auto g2ms = golden_ng2ms();
  REQUIRE(g2ms.size() == 7);
  CHECK(evaluate(g2ms.at(7), 12) == 5);
  CHECK(evaluate(g2ms.at(1), 9) == 1);
  CHECK(evaluate(g2ms.at(2), 9) == 0);
  auto f4ms = golden_nf4ms();
  REQUIRE(f4ms.size() == 6);
  CHECK(evaluate(f4ms.at(2), 2) == 2304);
  CHECK(evaluate(f4ms.at(8), 24) == 21888);
  // Every golden F4 column entry is divisible by 1152.
  for (const auto& [s, qp] : f4ms)
    for (long m = 1; m <= 48; ++m) CHECK(evaluate(qp, m) % 1152 == 0);
}

TEST_SUITE_END();
