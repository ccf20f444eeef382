#include "eforder/intmat.hpp"

#include <sstream>

namespace eforder {

IntMatrix to_int_matrix(const SmallMat& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

SmallMat to_small_matrix(const IntMatrix& m) {
  SmallMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_sint_p())
        throw std::overflow_error("to_small_matrix: entry out of int32 range");
      out(i, j) = static_cast<std::int32_t>(m(i, j).get_si());
    }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix b = a;
  int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (b(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      b.row(k).swap(b.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = b(i, j) * b(k, k) - b(i, k) * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = b(k, k);
  }
  return sign > 0 ? b(n - 1, n - 1) : Int(-b(n - 1, n - 1));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << m(i, j).get_str();
      if (j + 1 < m.cols()) os << ",";
    }
    os << "]";
    if (i + 1 < m.rows()) os << ",";
  }
  os << "]";
  return os.str();
}

std::string to_string(const IntRowVec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    os << v(j).get_str();
    if (j + 1 < v.cols()) os << ",";
  }
  os << "]";
  return os.str();
}

}  // namespace eforder
