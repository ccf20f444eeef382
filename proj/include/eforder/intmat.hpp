// intmat.hpp -- exact integer matrix types shared across the library.
//
// All arithmetic in this project is exact: matrices carry GMP integers
// (mpz_class) as their scalar type, rationals are mpq_class.  A 0xN
// matrix is a legal value throughout (its kernel is the whole ambient
// space).
#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eforder {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using IntColVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Compact matrices used in enumeration-heavy code paths.  Weyl group
// matrices permute a finite set of small integer vectors, so their
// entries stay tiny; int32 is ample.
using SmallMat = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;
using SmallRowVec = Eigen::Matrix<std::int32_t, 1, Eigen::Dynamic>;

inline bool eq(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero(const IntRowVec& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j)
    if (v(j) != 0) return false;
  return true;
}

// Flip the sign of v, if needed, so its first nonzero coordinate is
// positive.  The zero vector is returned unchanged.
inline IntRowVec sign_normalize(const IntRowVec& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    if (v(j) == 0) continue;
    if (v(j) < 0) return -v;
    return v;
  }
  return v;
}

// Strict lexicographic order on row vectors of equal length.
inline bool lex_less(const IntRowVec& a, const IntRowVec& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (a(j) != b(j)) return a(j) < b(j);
  }
  return false;
}

inline IntMatrix stack_rows(const std::vector<IntRowVec>& rows, Eigen::Index cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<size_t>(i)];
  return m;
}

inline IntMatrix identity_matrix(Eigen::Index n) {
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
  return m;
}

IntMatrix to_int_matrix(const SmallMat& m);
SmallMat to_small_matrix(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntRowVec& v);

// Signals corrupt shipped data or a broken internal invariant; the CLI
// maps it to its data-integrity exit code.
class DataIntegrityError : public std::runtime_error {
 public:
  explicit DataIntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eforder
