// rootdata.hpp -- Cartan matrices, root systems, and the torus weight
// data of the smallest faithful representation for G2, F4, E6, E7, E8.
//
// Conventions (fixed throughout the project):
//   * Simple roots are numbered as in Bourbaki.  For G2 the first
//     simple root is short; for F4 roots 1,2 are long and 3,4 short.
//   * cartan(i,j) = <alpha_i, alpha_j^vee>, so row i of the Cartan
//     matrix is the coordinate vector of alpha_i in the basis of
//     fundamental weights.
//   * Weight vectors live in fundamental-weight coordinates: the torus
//     element t(k) = prod_i h_i(e^{2 pi i k_i}) scales a weight-lambda
//     vector by e^{2 pi i (v . k)} where v_i = <lambda, alpha_i^vee>.
//   * A Weyl element acts on column vectors k through the same matrix
//     that acts on weight row vectors from the right (see weyl.hpp).
#pragma once

#include "eforder/intmat.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace eforder {

enum class GroupType { G2, F4, E6, E7, E8 };

constexpr std::array<GroupType, 5> kAllGroups = {GroupType::G2, GroupType::F4, GroupType::E6,
                                                 GroupType::E7, GroupType::E8};

int rank(GroupType g);
std::uint64_t weyl_order(GroupType g);
int expected_class_count(GroupType g);
// Period of the order-counting quasi-polynomial N(G, m).
long ngm_period(GroupType g);
const char* name(GroupType g);
std::optional<GroupType> parse_group(const std::string& s);

IntMatrix cartan_matrix(GroupType g);

// All roots, indexed; coordinates are kept both in the simple-root
// basis (for positivity tests) and the fundamental-weight basis (the
// basis every other module works in).
struct RootSystem {
  GroupType group;
  SmallMat simple_coords;  // n_roots x rank
  SmallMat weight_coords;  // n_roots x rank
  int positive_count = 0;  // roots 0 .. positive_count-1 are positive

  int size() const { return static_cast<int>(simple_coords.rows()); }
  bool is_negative(int r) const { return r >= positive_count; }
  // Index of the root with the given simple-root coordinates, or -1.
  int index_of_simple(const SmallRowVec& c) const;
  // Index of the root with the given fundamental-weight coordinates, or -1.
  int index_of_weight(const SmallRowVec& c) const;
};

const RootSystem& root_system(GroupType g);

// Torus shape of the smallest faithful representation.  For paired
// groups the diagonal comes in e^{+-2 pi i P_j} pairs and `vectors`
// holds one sign-normalized representative per pair; for E6 it holds
// all 27 weights verbatim (they are not closed under negation).
struct WeightSystem {
  GroupType group;
  int u = 0;                      // number of exponent vectors
  std::vector<IntRowVec> vectors; // v_1 .. v_u, each of length rank
  int one_slots = 0;              // multiplicity of the constant-1 diagonal slots
  bool paired = false;
  std::vector<int> spanning;      // 1-based indices of a Z-spanning subset

  const IntRowVec& vec(int j) const { return vectors[static_cast<size_t>(j - 1)]; }
};

const WeightSystem& weight_system(GroupType g);

// Lexicographically first rank-sized subset of {1..u} whose rows
// generate the same row lattice as the full weight stack.
std::vector<int> spanning_indices(const WeightSystem& ws);

// Exponent multiset of t(k) where k = nums/m: `one_slots` zeros,
// then P_j(k) mod 1 for each j (and -P_j(k) mod 1 when paired).
// Fractions are returned reduced, in [0, 1).
std::vector<Rat> torus_eigen_exponents(const WeightSystem& ws, const std::vector<Int>& nums,
                                       const Int& m);

int distinct_count(const std::vector<Rat>& exponents);

}  // namespace eforder
