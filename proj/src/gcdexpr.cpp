#include "eforder/gcdexpr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eforder {

namespace {

bool term_key_less(const GcdTerm& a, const GcdTerm& b) {
  if (a.power != b.power) return a.power < b.power;
  return a.divisors < b.divisors;
}

}  // namespace

GcdExpression GcdExpression::monomial(const Rat& coeff, int power,
                                      const std::vector<Int>& divisors) {
  GcdExpression e;
  if (coeff == 0) return e;
  GcdTerm t;
  t.coeff = coeff;
  t.power = power;
  for (const Int& d : divisors) {
    if (d < 1) throw std::invalid_argument("GcdExpression: divisors must be positive");
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw std::overflow_error("GcdExpression: divisor out of range");
    // Split into prime powers: gcd(d, m) is multiplicative over coprime
    // factors, and the canonical prime-power bags merge across terms.
    long rest = d.get_si();
    for (long p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      long q = 1;
      while (rest % p == 0) {
        q *= p;
        rest /= p;
      }
      t.divisors.push_back(q);
    }
    if (rest > 1) t.divisors.push_back(rest);
  }
  std::sort(t.divisors.begin(), t.divisors.end());
  e.terms_.push_back(std::move(t));
  return e;
}

void GcdExpression::merge() {
  std::sort(terms_.begin(), terms_.end(), term_key_less);
  std::vector<GcdTerm> out;
  for (GcdTerm& t : terms_) {
    if (!out.empty() && out.back().power == t.power && out.back().divisors == t.divisors)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const GcdTerm& t) { return t.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

GcdExpression& GcdExpression::operator+=(const GcdExpression& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  merge();
  return *this;
}

GcdExpression& GcdExpression::operator-=(const GcdExpression& o) {
  for (const GcdTerm& t : o.terms_) {
    GcdTerm n = t;
    n.coeff = -n.coeff;
    terms_.push_back(std::move(n));
  }
  merge();
  return *this;
}

GcdExpression& GcdExpression::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (GcdTerm& t : terms_) t.coeff *= c;
  return *this;
}

Rat GcdExpression::evaluate_rat(const Int& m) const {
  if (m < 1) throw std::invalid_argument("GcdExpression: m must be >= 1");
  Rat acc = 0;
  for (const GcdTerm& t : terms_) {
    Int v;
    mpz_pow_ui(v.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(t.power));
    for (long d : t.divisors) v *= gcd(Int(d), m);
    acc += t.coeff * Rat(v);
  }
  return acc;
}

Int GcdExpression::evaluate(const Int& m) const {
  Rat v = evaluate_rat(m);
  if (v.get_den() != 1)
    throw DataIntegrityError("GcdExpression: evaluation is not an integer at m=" + m.get_str());
  return v.get_num();
}

long GcdExpression::divisor_lcm() const {
  long l = 1;
  for (const GcdTerm& t : terms_)
    for (long d : t.divisors) l = std::lcm(l, d);
  return l;
}

std::string GcdExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const GcdTerm& t = *it;
    if (!first) os << " + ";
    first = false;
    os << t.coeff.get_str();
    if (t.power > 0) os << "*m" << (t.power > 1 ? "^" + std::to_string(t.power) : "");
    for (long d : t.divisors) os << "*gcd(" << d << ",m)";
  }
  return os.str();
}

}  // namespace eforder
