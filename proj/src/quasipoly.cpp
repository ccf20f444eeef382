#include "eforder/quasipoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eforder {

namespace {

using nlohmann::json;

Polynomial interpolate(const std::vector<std::pair<Int, Int>>& points) {
  // Solve the Vandermonde system exactly by Gaussian elimination.
  const size_t n = points.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    Rat x(points[i].first);
    Rat p = 1;
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= x;
    }
    a[i][n] = Rat(points[i].second);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw FitError("interpolation: singular system");
    std::swap(a[col], a[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  Polynomial p;
  p.coeffs.resize(n);
  for (size_t i = 0; i < n; ++i) {
    p.coeffs[i] = a[i][n] / a[i][i];
    p.coeffs[i].canonicalize();
  }
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

json poly_to_json(long r, const Polynomial& p) {
  Int den = 1;
  for (const Rat& c : p.coeffs) den = lcm(den, Int(c.get_den()));
  json row;
  row["r"] = r;
  row["denominator"] = den.get_str();
  std::vector<std::string> nums;
  for (const Rat& c : p.coeffs) {
    Rat scaled = c * Rat(den);
    nums.push_back(Int(scaled.get_num()).get_str());
  }
  row["numerator_coeffs"] = nums;
  return row;
}

}  // namespace

Rat Polynomial::eval(const Int& m) const {
  Rat acc = 0;
  Rat p = 1;
  for (const Rat& c : coeffs) {
    acc += c * p;
    p *= Rat(m);
  }
  return acc;
}

QuasiPolynomial fit(const Sampler& sampler, int degree, long period) {
  if (degree < 0 || period < 1) throw std::invalid_argument("fit: bad degree or period");
  QuasiPolynomial qp;
  qp.period = period;
  qp.polys.resize(static_cast<size_t>(period));
  for (long r = 0; r < period; ++r) {
    const long base = (r == 0) ? period : r;
    std::vector<std::pair<Int, Int>> pts;
    for (int t = 0; t <= degree; ++t) {
      long m = base + period * t;
      pts.emplace_back(m, sampler(m));
    }
    Polynomial p = interpolate(pts);
    for (int t = degree + 1; t <= degree + 2; ++t) {
      long m = base + period * t;
      Rat want(sampler(m));
      if (p.eval(m) != want) {
        std::ostringstream os;
        os << "fit: held-out sample mismatch at m=" << m << " (period " << period << ", residue "
           << r << ")";
        throw FitError(os.str());
      }
    }
    qp.polys[static_cast<size_t>(r)] = std::move(p);
  }
  return qp;
}

Int evaluate(const QuasiPolynomial& qp, const Int& m) {
  if (m < 1) throw std::invalid_argument("evaluate: m must be >= 1");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), Int(qp.period).get_mpz_t());
  Rat v = qp.at_residue(r.get_si()).eval(m);
  if (v.get_den() != 1)
    throw DataIntegrityError("quasipolynomial evaluates to a non-integer at m=" + m.get_str());
  return v.get_num();
}

long detect_period(const GcdExpression& expr) {
  const long l = expr.divisor_lcm();
  int degree = 0;
  for (const GcdTerm& t : expr.terms()) degree = std::max(degree, t.power);
  Sampler s = [&expr](long m) { return expr.evaluate(m); };
  // Sampling window: enough to see every residue class mod lcm several
  // times, whatever candidate period is under test.
  const long window =
      std::min<long>(100000, std::max<long>(4 * l, (degree + 3) * l) + degree + 3);
  std::vector<long> divisors;
  for (long d = 1; d <= l; ++d)
    if (l % d == 0) divisors.push_back(d);
  for (long d : divisors) {
    try {
      QuasiPolynomial qp = fit(s, degree, d);
      bool ok = true;
      for (long m = 1; m <= window && ok; ++m)
        if (evaluate(qp, m) != expr.evaluate(m)) ok = false;
      if (ok) return d;
    } catch (const FitError&) {
      // d is not a period; try the next divisor.
    }
  }
  throw DataIntegrityError("detect_period: the divisor lcm is not a period");
}

QuasiPolynomial quasipoly_from_expr(const GcdExpression& expr, int degree) {
  return fit([&expr](long m) { return expr.evaluate(m); }, degree, detect_period(expr));
}

std::string common_denominator_form(const Polynomial& p) {
  if (p.coeffs.empty()) return "0";
  Int den = 1;
  for (const Rat& c : p.coeffs) den = lcm(den, Int(c.get_den()));
  std::ostringstream os;
  bool parens = den != 1;
  if (parens) os << "(";
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rat scaled = p.coeffs[static_cast<size_t>(k)] * Rat(den);
    Int n = scaled.get_num();
    if (n == 0) continue;
    if (first) {
      if (n < 0) os << "-";
    } else {
      os << (n < 0 ? "-" : "+");
    }
    first = false;
    Int an = abs(n);
    if (an != 1 || k == 0) os << an.get_str();
    if (k >= 1) {
      os << "m";
      if (k >= 2) os << "^" << k;
    }
  }
  if (first) os << "0";
  if (parens) os << ")/" << den.get_str();
  return os.str();
}

std::string emit_table(const QuasiPolynomial& qp, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::kMarkdown: {
      os << "| m mod " << qp.period << " | value |\n|---|---|\n";
      // Group residues sharing one polynomial, in order of first appearance.
      std::vector<bool> done(static_cast<size_t>(qp.period), false);
      for (long r = 0; r < qp.period; ++r) {
        if (done[static_cast<size_t>(r)]) continue;
        std::vector<long> group;
        for (long r2 = r; r2 < qp.period; ++r2)
          if (!done[static_cast<size_t>(r2)] && qp.polys[static_cast<size_t>(r2)] == qp.polys[static_cast<size_t>(r)]) {
            group.push_back(r2);
            done[static_cast<size_t>(r2)] = true;
          }
        for (size_t i = 0; i < group.size(); ++i) os << (i ? "," : "| ") << group[i];
        os << " | " << common_denominator_form(qp.at_residue(r)) << " |\n";
      }
      break;
    }
    case TableFormat::kCsv: {
      os << "residue,denominator,coeffs_ascending\n";
      for (long r = 0; r < qp.period; ++r) {
        const Polynomial& p = qp.at_residue(r);
        Int den = 1;
        for (const Rat& c : p.coeffs) den = lcm(den, Int(c.get_den()));
        os << r << "," << den.get_str() << ",";
        for (size_t k = 0; k < p.coeffs.size(); ++k) {
          Rat scaled = p.coeffs[k] * Rat(den);
          os << (k ? " " : "") << Int(scaled.get_num()).get_str();
        }
        os << "\n";
      }
      break;
    }
    case TableFormat::kJson: {
      json doc;
      doc["period"] = qp.period;
      doc["residues"] = json::array();
      for (long r = 0; r < qp.period; ++r) doc["residues"].push_back(poly_to_json(r, qp.at_residue(r)));
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

QuasiPolynomial quasipoly_from_json(const std::string& text) {
  json doc = json::parse(text);
  QuasiPolynomial qp;
  qp.period = doc.at("period").get<long>();
  qp.polys.resize(static_cast<size_t>(qp.period));
  for (const auto& row : doc.at("residues")) {
    long r = row.at("r").get<long>();
    Int den(row.at("denominator").get<std::string>());
    Polynomial p;
    for (const auto& n : row.at("numerator_coeffs")) {
      Rat c(Int(n.get<std::string>()), den);
      c.canonicalize();
      p.coeffs.push_back(c);
    }
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
    qp.polys.at(static_cast<size_t>(r)) = std::move(p);
  }
  return qp;
}

}  // namespace eforder
