// ordercount.hpp -- N(G, m) through Burnside's lemma over Weyl
// conjugacy classes: each class representative contributes the kernel
// size of its fixed-point system, counted by Smith normal form.
#pragma once

#include "eforder/quasipoly.hpp"
#include "eforder/smith.hpp"
#include "eforder/weyl.hpp"

namespace eforder {

// Homogeneous system whose kernel over ((1/m)Z/Z)^rank is Fix(w) for
// every m.  Rows come from equating the spanning diagonal entries of
// w.t(k) and t(k): sigma(i) = i contributes nothing, sigma(i) = -i
// contributes 2 v_i, sigma(i) = +-j contributes v_i -+ v_j.  Redundant
// duplicates are kept.
struct FixSystem {
  IntMatrix matrix;
  std::vector<Int> divisors;  // elementary divisors, cached for reuse across m
};

FixSystem fix_matrix(const WeylElement& w, const WeightSystem& ws);
Int fix_count(const WeylElement& w, const WeightSystem& ws, const Int& m);

// Per-group counter; builds the class table and the per-class fixed
// point systems once, then evaluates N(G, m) in O(classes) gcds.
class OrderCounter {
 public:
  OrderCounter(GroupType g, ConjugacyClassTable table);

  GroupType group() const { return group_; }
  const ConjugacyClassTable& table() const { return table_; }
  const std::vector<FixSystem>& systems() const { return systems_; }

  Int n_gm(const Int& m) const;
  // Fit of the per-residue polynomials at the group's known period;
  // verified on held-out samples.
  QuasiPolynomial n_gm_quasipoly() const;

 private:
  GroupType group_;
  ConjugacyClassTable table_;
  std::vector<FixSystem> systems_;
};

// Convenience entry point using the embedded class table.
Int n_gm(GroupType g, const Int& m, const std::string& data_dir = default_data_dir());

}  // namespace eforder
