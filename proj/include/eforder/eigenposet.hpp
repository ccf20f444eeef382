// eigenposet.hpp -- the N(G, m, s) engine: the coincidence matrix P,
// the closed poset M of its lattice-saturated submatrices, the
// distinct-eigenvalue count s(S), the fixed-locus rows S_w, and the
// Moebius-inverted counts f_m feeding the Burnside sum.
//
// A torus element t(k) has repeated eigenvalues exactly when k lies in
// the kernel of some rows of P (sums, differences, singles and doubles
// of the weight vectors).  Every k has a unique minimal annihilating
// submatrix, which is lattice-closed; counting k's by their minimal
// node is Moebius inversion over reverse rowset inclusion.
#pragma once

#include "eforder/gcdexpr.hpp"
#include "eforder/hermite.hpp"
#include "eforder/ordercount.hpp"
#include "eforder/weyl.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>

namespace eforder {

using RowSet = boost::dynamic_bitset<>;

struct PRow {
  IntRowVec v;  // sign-normalized, nonzero
  // Provenance tags; one row can carry several when algebraic forms
  // coincide, and the s-function must see every relation it witnesses.
  std::vector<std::pair<int, int>> sums;   // v ~ +-(v_i + v_j), i < j
  std::vector<std::pair<int, int>> diffs;  // v ~ +-(v_i - v_j), i < j
  std::vector<int> singles;                // v ~ +-v_i
  std::vector<int> doubles;                // v ~ +-2 v_i
};

struct PMatrix {
  GroupType group;
  std::vector<PRow> rows;
  std::map<std::vector<long>, int> index;  // sign-normalized coords -> row
  std::vector<int> single_row_of;          // 1-based weight index -> P row of v_i (or -1)

  int size() const { return static_cast<int>(rows.size()); }
  // Row index of the sign-normalized vector, or -1.
  int find_row(const IntRowVec& v) const;
  IntMatrix stacked(const RowSet& set) const;
  // Stable digest of the row list, for cache validation.
  std::uint64_t digest() const;
};

PMatrix build_p_matrix(const WeightSystem& ws);

struct MNode {
  RowSet rowset;
  RowLattice lattice;
  std::vector<Int> divisors;
  int rank = 0;
  int svalue = 0;
};

// Lattice saturation of a row subset: all P-rows inside the row
// lattice generated by the selected rows.
MNode closure(const RowSet& subset, const PMatrix& p);
MNode closure(const std::vector<int>& row_indices, const PMatrix& p);

// Smallest r such that every row lattice of a submatrix of P is
// generated by at most r of its rows (breadth-first over lattices).
int find_r(const PMatrix& p);

struct MPoset {
  PMatrix p;
  std::vector<MNode> nodes;      // sorted by (rowset popcount desc, rowset value)
  int r_bound = 0;               // the find_r value observed while building
  int empty_node = -1;           // index of the empty-rowset node
  int full_node = -1;            // index of the full-P node

  int find_node(const RowSet& rowset) const;
  int size() const { return static_cast<int>(nodes.size()); }
};

// Builds M for G2 or F4.  E6, E7 and E8 are refused: their posets are
// computationally out of reach (for E6 alone the required sweep over
// 7-row submatrices of a 441-row matrix is ~6e14 lattice checks).
MPoset build_m_poset(const WeightSystem& ws);

// Moebius function of M (memoless interval recursion; test support).
Int mobius(const MPoset& poset, int t_idx, int s_idx);

// Number of distinct eigenvalues of the torus elements whose minimal
// annihilating node is `rowset`.
int s_value(const RowSet& rowset, const PMatrix& p, const WeightSystem& ws);

// g_m(S) = |ker S| over ((1/m)Z/Z)^rank, symbolically and numerically.
GcdExpression g_sym(const MNode& node, int rank);
Int g_m(const MNode& node, int rank, const Int& m);

// Rows of P cutting out the fixed locus of w (possibly empty).
RowSet s_w(const WeylElement& w, const WeightSystem& ws, const PMatrix& p);

// f_m for every node: g_m with all strictly finer nodes removed.
std::vector<GcdExpression> f_sym_all(const MPoset& poset);

// Cache round-trip for the (expensive) F4 poset.
void save_m_poset(const MPoset& poset, const std::string& path);
std::optional<MPoset> load_m_poset(const WeightSystem& ws, const std::string& path);

// Full N(G, m, s) engine over a validated class table.
class EigenCountEngine {
 public:
  // An empty cache_dir disables the poset cache.
  EigenCountEngine(GroupType g, ConjugacyClassTable table, const std::string& cache_dir = "");

  const MPoset& poset() const { return poset_; }
  const ConjugacyClassTable& table() const { return table_; }
  const std::vector<GcdExpression>& f_expressions() const { return fsym_; }

  // Largest possible distinct-eigenvalue count (s of the empty node).
  int max_s() const { return max_s_; }

  Int f_m(int node_idx, const Int& m) const { return fsym_[static_cast<size_t>(node_idx)].evaluate(m); }
  Int fix_s_count(const WeylElement& w, const Int& m, int s) const;
  Int n_gms(const Int& m, int s) const;
  GcdExpression n_gms_symbolic(int s) const;

 private:
  GroupType group_;
  ConjugacyClassTable table_;
  MPoset poset_;
  std::vector<GcdExpression> fsym_;
  std::vector<RowSet> class_sw_;
  std::vector<GcdExpression> column_;  // per s, weighted and divided by |W|
  int max_s_ = 0;
};

}  // namespace eforder
