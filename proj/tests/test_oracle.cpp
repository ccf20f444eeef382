#include "doctest.h"

#include "eforder/eigenposet.hpp"
#include "eforder/oracle.hpp"

using namespace eforder;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("budgets are enforced") {
  CHECK(oracle_in_budget(GroupType::G2, 24));
  CHECK_FALSE(oracle_in_budget(GroupType::G2, 25));
  CHECK(oracle_in_budget(GroupType::F4, 6));
  CHECK_FALSE(oracle_in_budget(GroupType::F4, 7));
  CHECK_FALSE(oracle_in_budget(GroupType::E6, 2));
  CHECK_THROWS_AS((void)brute_n_gm(GroupType::G2, 25), std::invalid_argument);
}

TEST_CASE("brute orbit counts at the worked values") {
  CHECK(brute_n_gm(GroupType::G2, 6) == 7);
  CHECK(brute_n_gm(GroupType::G2, 1) == 1);
  CHECK(brute_n_gm(GroupType::F4, 2) == 3);
}

TEST_CASE("brute eigenvalue-refined counts at the worked values") {
  CHECK(brute_n_gms(GroupType::G2, 2, 2) == 1);
  CHECK(brute_n_gms(GroupType::G2, 3, 3) == 2);
  for (long m = 1; m <= 12; ++m) CHECK(brute_n_gms(GroupType::G2, m, 1) == 1);
}

TEST_CASE("orbit sizes divide |W| and refined counts partition the total") {
  for (long m = 1; m <= 8; ++m) {
    for (long size : brute_orbit_sizes(GroupType::G2, m)) CHECK(12 % size == 0);
    Int total = 0;
    for (int s = 1; s <= 7; ++s) total += brute_n_gms(GroupType::G2, m, s);
    CHECK(total == brute_n_gm(GroupType::G2, m));
  }
  for (long size : brute_orbit_sizes(GroupType::F4, 3)) CHECK(1152 % size == 0);
}

TEST_CASE("oracle agrees with the Burnside engine (G2)") {
  OrderCounter counter(GroupType::G2, conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate));
  for (long m = 1; m <= 12; ++m) CHECK(brute_n_gm(GroupType::G2, m) == counter.n_gm(m));
}

TEST_CASE("oracle agrees with the eigen engine (G2, small m)") {
  EigenCountEngine engine(GroupType::G2,
                          conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate));
  for (long m = 1; m <= 8; ++m)
    for (int s = 1; s <= 7; ++s) CHECK(brute_n_gms(GroupType::G2, m, s) == engine.n_gms(m, s));
}

TEST_SUITE_END();
