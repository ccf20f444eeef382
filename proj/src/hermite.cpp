#include "eforder/hermite.hpp"

#include <sstream>

namespace eforder {

RowLattice rhnf(const IntMatrix& a) {
  IntMatrix b = a;
  const Eigen::Index rows = b.rows(), cols = b.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Reduce column c to a single nonzero entry at row r.
    for (;;) {
      Eigen::Index piv = -1;
      Int best;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (b(i, c) == 0) continue;
        Int v = abs(b(i, c));
        if (piv < 0 || v < best) {
          best = v;
          piv = i;
        }
      }
      if (piv < 0) break;
      if (piv != r) b.row(r).swap(b.row(piv));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (b(i, c) == 0) continue;
        Int q = b(i, c) / b(r, c);
        if (q != 0) b.row(i) -= q * b.row(r);
        if (b(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (b(r, c) == 0) continue;
    if (b(r, c) < 0) b.row(r) = -b.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
      if (q != 0) b.row(i) -= q * b.row(r);
    }
    ++r;
  }
  RowLattice out;
  out.basis = b.topRows(r);
  return out;
}

bool in_row_lattice(const IntRowVec& v, const RowLattice& l) {
  if (v.cols() != l.basis.cols() && l.basis.rows() > 0)
    throw std::invalid_argument("in_row_lattice: dimension mismatch");
  IntRowVec w = v;
  for (Eigen::Index i = 0; i < l.basis.rows(); ++i) {
    Eigen::Index p = 0;
    while (p < l.basis.cols() && l.basis(i, p) == 0) ++p;
    if (w(p) % l.basis(i, p) != 0) return false;
    Int q = w(p) / l.basis(i, p);
    if (q != 0) w -= q * l.basis.row(i);
  }
  return is_zero(w);
}

bool row_lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("row_lattice_equal: column mismatch");
  return rhnf(a) == rhnf(b);
}

std::string lattice_key(const RowLattice& l) {
  std::ostringstream os;
  os << l.basis.rows() << "x" << l.basis.cols() << ":";
  for (Eigen::Index i = 0; i < l.basis.rows(); ++i)
    for (Eigen::Index j = 0; j < l.basis.cols(); ++j) os << l.basis(i, j).get_str() << ",";
  return os.str();
}

}  // namespace eforder
