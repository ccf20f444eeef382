// hermite.hpp -- row-style Hermite normal form, canonical row lattices,
// and lattice membership tests.
#pragma once

#include "eforder/intmat.hpp"

namespace eforder {

// Canonical basis of a row lattice: row-style HNF with positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
// Two integer matrices generate the same row lattice iff their
// RowLattice bases are identical.
struct RowLattice {
  IntMatrix basis;

  Eigen::Index rank() const { return basis.rows(); }
  bool operator==(const RowLattice& o) const { return eq(basis, o.basis); }
};

RowLattice rhnf(const IntMatrix& a);

// True iff v is an integer combination of the basis rows of L.
bool in_row_lattice(const IntRowVec& v, const RowLattice& l);

bool row_lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Stable text key for a canonical basis; used to deduplicate lattices.
std::string lattice_key(const RowLattice& l);

}  // namespace eforder
