// quasipoly.hpp -- exact quasi-polynomials: per-residue polynomials
// with rational coefficients, reconstructed from integer samplers by
// exact interpolation and verified on held-out samples.
#pragma once

#include "eforder/gcdexpr.hpp"

#include <functional>

namespace eforder {

struct Polynomial {
  std::vector<Rat> coeffs;  // ascending powers; trailing zeros trimmed

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Int& m) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct QuasiPolynomial {
  long period = 1;
  std::vector<Polynomial> polys;  // index = residue class mod period

  const Polynomial& at_residue(long r) const { return polys[static_cast<size_t>(r)]; }
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

using Sampler = std::function<Int(long)>;

// Exact interpolation through degree+1 samples per residue (arithmetic
// progression with step = period), verified against extra held-out
// samples; throws FitError on mismatch.
QuasiPolynomial fit(const Sampler& sampler, int degree, long period);

// Exact evaluation; throws DataIntegrityError on a non-integer value.
Int evaluate(const QuasiPolynomial& qp, const Int& m);

// Minimal period of a symbolic count: the lcm of its surviving
// divisors, cross-checked by attempting fits at every proper divisor.
long detect_period(const GcdExpression& expr);

// Expand a symbolic count into its per-residue polynomial table.
QuasiPolynomial quasipoly_from_expr(const GcdExpression& expr, int degree);

enum class TableFormat { kMarkdown, kCsv, kJson };

std::string emit_table(const QuasiPolynomial& qp, TableFormat format);
QuasiPolynomial quasipoly_from_json(const std::string& text);

// Render a polynomial over one common denominator, descending powers,
// e.g. "(m^2+6m+12)/12".
std::string common_denominator_form(const Polynomial& p);

}  // namespace eforder
