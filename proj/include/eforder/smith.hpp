// smith.hpp -- Smith normal form over the integers and kernel counting
// over (1/m Z)/Z.
#pragma once

#include "eforder/intmat.hpp"

namespace eforder {

// left * A * right == diag, with |det left| == |det right| == 1.  The
// elementary divisors d_1 | d_2 | ... | d_r are positive and their
// count equals rank(A); trailing 1s are kept.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  IntMatrix diag;
  std::vector<Int> divisors;
};

SmithDecomposition snf(const IntMatrix& a);

// Elementary divisors only (cheaper to hold on to than the transforms).
std::vector<Int> elementary_divisors(const IntMatrix& a);

// Number of solutions of A k == 0 with k in ((1/m)Z/Z)^cols, i.e.
// m^(cols - r) * prod gcd(d_i, m).  Throws std::invalid_argument for
// m < 1.
Int kernel_count(const IntMatrix& a, const Int& m);

// Same count from precomputed divisors of an (r x cols) presentation.
Int kernel_count_from_divisors(const std::vector<Int>& divisors, Eigen::Index cols,
                               const Int& m);

}  // namespace eforder
