// gcdexpr.hpp -- exact symbolic counts of the form
//   sum_t  coeff_t * m^power_t * prod_{d in bag_t} gcd(d, m),
// the closed shape produced by kernel counting and preserved by the
// Moebius sums.  Terms are kept merged and canonically ordered.
#pragma once

#include "eforder/intmat.hpp"

#include <compare>

namespace eforder {

struct GcdTerm {
  Rat coeff;
  int power = 0;
  std::vector<long> divisors;  // sorted, every entry >= 2

  friend bool operator==(const GcdTerm&, const GcdTerm&) = default;
};

class GcdExpression {
 public:
  GcdExpression() = default;
  // m^power * prod gcd(d_i, m); divisors equal to 1 are dropped.
  static GcdExpression monomial(const Rat& coeff, int power, const std::vector<Int>& divisors);
  static GcdExpression constant(const Rat& c) { return monomial(c, 0, {}); }

  const std::vector<GcdTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GcdExpression& operator+=(const GcdExpression& o);
  GcdExpression& operator-=(const GcdExpression& o);
  GcdExpression& operator*=(const Rat& c);
  friend GcdExpression operator+(GcdExpression a, const GcdExpression& b) { return a += b; }
  friend GcdExpression operator-(GcdExpression a, const GcdExpression& b) { return a -= b; }
  friend GcdExpression operator*(GcdExpression a, const Rat& c) { return a *= c; }
  friend bool operator==(const GcdExpression&, const GcdExpression&) = default;

  Rat evaluate_rat(const Int& m) const;
  // Evaluation that must land on an integer (counts); throws
  // DataIntegrityError otherwise.
  Int evaluate(const Int& m) const;

  // lcm of all divisors across surviving terms (1 for divisor-free).
  long divisor_lcm() const;

  std::string to_string() const;

 private:
  void merge();
  std::vector<GcdTerm> terms_;
};

}  // namespace eforder
