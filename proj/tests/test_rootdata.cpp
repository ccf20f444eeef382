#include "doctest.h"

#include "eforder/hermite.hpp"
#include "eforder/rootdata.hpp"
#include "eforder/smith.hpp"

#include <set>

using namespace eforder;

namespace {

IntRowVec rowvec(std::initializer_list<long> xs) {
  IntRowVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index j = 0;
  for (long x : xs) v(j++) = x;
  return v;
}

std::set<std::vector<long>> vec_set(const std::vector<IntRowVec>& vs) {
  std::set<std::vector<long>> out;
  for (const auto& v : vs) {
    std::vector<long> k;
    for (Eigen::Index i = 0; i < v.cols(); ++i) k.push_back(v(i).get_si());
    out.insert(k);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("rootdata");

TEST_CASE("cartan matrices have the right determinants") {
  CHECK(determinant(cartan_matrix(GroupType::G2)) == 1);
  CHECK(determinant(cartan_matrix(GroupType::F4)) == 1);
  CHECK(determinant(cartan_matrix(GroupType::E6)) == 3);
  CHECK(determinant(cartan_matrix(GroupType::E7)) == 2);
  CHECK(determinant(cartan_matrix(GroupType::E8)) == 1);
  IntMatrix g2 = cartan_matrix(GroupType::G2);
  CHECK(g2(0, 0) == 2);
  CHECK(g2(1, 1) == 2);
  CHECK(g2(0, 1) * g2(1, 0) == 3);
  for (GroupType g : kAllGroups) {
    IntMatrix c = cartan_matrix(g);
    for (Eigen::Index i = 0; i < c.rows(); ++i) CHECK(c(i, i) == 2);
  }
}

TEST_CASE("root system sizes") {
  CHECK(root_system(GroupType::G2).size() == 12);
  CHECK(root_system(GroupType::F4).size() == 48);
  CHECK(root_system(GroupType::E6).size() == 72);
  CHECK(root_system(GroupType::E7).size() == 126);
  CHECK(root_system(GroupType::E8).size() == 240);
}

TEST_CASE("weight system shapes") {
  const WeightSystem& g2 = weight_system(GroupType::G2);
  CHECK(g2.u == 3);
  CHECK(g2.one_slots == 1);
  CHECK(g2.paired);
  CHECK(vec_set(g2.vectors) ==
        vec_set({rowvec({1, 0}), rowvec({1, -1}), rowvec({2, -1})}));

  CHECK(weight_system(GroupType::F4).u == 12);
  CHECK(weight_system(GroupType::E6).u == 27);
  CHECK_FALSE(weight_system(GroupType::E6).paired);
  CHECK(weight_system(GroupType::E7).u == 28);
  const WeightSystem& e8 = weight_system(GroupType::E8);
  CHECK(e8.u == 120);
  CHECK(e8.one_slots == 8);
}

TEST_CASE("weight vectors are distinct, nonzero, and span") {
  for (GroupType g : kAllGroups) {
    const WeightSystem& ws = weight_system(g);
    auto keys = vec_set(ws.vectors);
    CHECK(static_cast<int>(keys.size()) == ws.u);
    if (ws.paired) {
      // No v_i equals -v_j (vectors are sign-normalized pair representatives).
      for (const auto& v : ws.vectors) {
        std::vector<long> negkey;
        for (Eigen::Index t = 0; t < v.cols(); ++t) negkey.push_back(-v(t).get_si());
        CHECK(keys.count(negkey) == 0);
      }
    }
    RowLattice full = rhnf(stack_rows(ws.vectors, rank(g)));
    CHECK(eq(full.basis, identity_matrix(rank(g))));
  }
}

TEST_CASE("spanning indices generate the full row lattice") {
  for (GroupType g : kAllGroups) {
    const WeightSystem& ws = weight_system(g);
    REQUIRE(static_cast<int>(ws.spanning.size()) == rank(g));
    std::vector<IntRowVec> rows;
    for (int i : ws.spanning) rows.push_back(ws.vec(i));
    CHECK(eq(rhnf(stack_rows(rows, rank(g))).basis, identity_matrix(rank(g))));
  }
  // G2 with vectors sorted [1,-1],[1,0],[2,-1]: the first two span.
  CHECK(weight_system(GroupType::G2).spanning == std::vector<int>{1, 2});
}

TEST_CASE("torus eigen exponents (G2 worked points)") {
  const WeightSystem& ws = weight_system(GroupType::G2);
  // k = (1/3, 0): three distinct eigenvalues {0, 1/3, 2/3}.
  auto e1 = torus_eigen_exponents(ws, {Int(1), Int(0)}, 3);
  CHECK(distinct_count(e1) == 3);
  // identity: single eigenvalue.
  auto e2 = torus_eigen_exponents(ws, {Int(0), Int(0)}, 1);
  CHECK(distinct_count(e2) == 1);
  // k = (1/2, 0): multiset {0 x 3, 1/2 x 4} -> 2 distinct.
  auto e3 = torus_eigen_exponents(ws, {Int(1), Int(0)}, 2);
  CHECK(distinct_count(e3) == 2);
  CHECK(e3.size() == 7);
  int halves = 0, zeros = 0;
  for (const Rat& r : e3) {
    if (r == Rat(1, 2)) ++halves;
    if (r == 0) ++zeros;
  }
  CHECK(halves == 4);
  CHECK(zeros == 3);
}

TEST_CASE("G2 torus diagonal matches the explicit 7x7 fixture") {
  // Diagonal exponent vectors of the 7-dim torus element, in the order
  // (P1, P2, P3, 0, -P3, -P2, -P1) with P1 = k1, P2 = -(k1 - k2),
  // P3 = 2 k1 - k2.
  std::vector<IntRowVec> slots = {rowvec({1, 0}),  rowvec({-1, 1}), rowvec({2, -1}),
                                  rowvec({0, 0}),  rowvec({-2, 1}), rowvec({1, -1}),
                                  rowvec({-1, 0})};
  const WeightSystem& ws = weight_system(GroupType::G2);
  // Up to pairing and permutation: the sign-normalized slot vectors are
  // exactly {one zero slot} + two copies of each weight vector.
  std::multiset<std::vector<long>> expect, got;
  for (const auto& s : slots) {
    IntRowVec n = sign_normalize(s);
    std::vector<long> k;
    for (Eigen::Index i = 0; i < n.cols(); ++i) k.push_back(n(i).get_si());
    got.insert(k);
  }
  expect.insert({0, 0});
  for (const auto& v : ws.vectors) {
    std::vector<long> k;
    for (Eigen::Index i = 0; i < v.cols(); ++i) k.push_back(v(i).get_si());
    expect.insert(k);
    expect.insert(k);
  }
  CHECK(expect == got);
}

TEST_SUITE_END();
