#include "eforder/smith.hpp"

#include <cstdlib>

namespace eforder {

namespace {

// Position of a nonzero entry of minimal absolute value in the
// trailing block starting at (t, t), or (-1, -1) if the block is zero.
// Minimal pivots keep the coefficient growth tame; the matrices here
// are small, so nothing fancier is needed.
std::pair<Eigen::Index, Eigen::Index> min_pivot(const IntMatrix& d, Eigen::Index t) {
  Eigen::Index bi = -1, bj = -1;
  Int best;
  for (Eigen::Index i = t; i < d.rows(); ++i)
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (bi < 0 || a < best) {
        best = a;
        bi = i;
        bj = j;
      }
    }
  return {bi, bj};
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  const Eigen::Index n = a.rows(), l = a.cols();
  SmithDecomposition out;
  out.left = identity_matrix(n);
  out.right = identity_matrix(l);
  out.diag = a;
  IntMatrix& d = out.diag;

  Eigen::Index t = 0;
  while (t < n && t < l) {
    auto [pi, pj] = min_pivot(d, t);
    if (pi < 0) break;
    d.row(t).swap(d.row(pi));
    out.left.row(t).swap(out.left.row(pi));
    d.col(t).swap(d.col(pj));
    out.right.col(t).swap(out.right.col(pj));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t below the pivot.
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);  // truncated division
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          out.left.row(i) -= q * out.left.row(t);
        }
        if (d(i, t) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          d.row(t).swap(d.row(i));
          out.left.row(t).swap(out.left.row(i));
          dirty = true;
        }
      }
      // Clear row t to the right of the pivot.
      for (Eigen::Index j = t + 1; j < l; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          out.right.col(j) -= q * out.right.col(t);
        }
        if (d(t, j) != 0) {
          d.col(t).swap(d.col(j));
          out.right.col(t).swap(out.right.col(j));
          dirty = true;
        }
      }
    }

    // Enforce the divisibility chain: the pivot must divide every entry
    // of the trailing block.
    bool fixed = true;
    for (Eigen::Index i = t + 1; i < n && fixed; ++i)
      for (Eigen::Index j = t + 1; j < l && fixed; ++j) {
        if (d(i, j) % d(t, t) != 0) {
          d.row(t) += d.row(i);
          out.left.row(t) += out.left.row(i);
          fixed = false;
        }
      }
    if (fixed) ++t;
  }

  for (Eigen::Index i = 0; i < std::min(n, l); ++i) {
    if (d(i, i) < 0) {
      d.row(i) = -d.row(i);
      out.left.row(i) = -out.left.row(i);
    }
    if (d(i, i) != 0) out.divisors.push_back(d(i, i));
  }
  return out;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) { return snf(a).divisors; }

Int kernel_count_from_divisors(const std::vector<Int>& divisors, Eigen::Index cols,
                               const Int& m) {
  if (m < 1) throw std::invalid_argument("kernel_count: m must be >= 1");
  const Eigen::Index r = static_cast<Eigen::Index>(divisors.size());
  Int count;
  mpz_pow_ui(count.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(cols - r));
  for (const Int& d : divisors) count *= gcd(d, m);
  return count;
}

Int kernel_count(const IntMatrix& a, const Int& m) {
  return kernel_count_from_divisors(elementary_divisors(a), a.cols(), m);
}

}  // namespace eforder
