// golden.hpp -- loaders for the shipped reference tables (published
// closed forms for N(G, m) and the eigenvalue-refined counts) used by
// the regression and acceptance suites.
#pragma once

#include "eforder/quasipoly.hpp"
#include "eforder/rootdata.hpp"
#include "eforder/weyl.hpp"

#include <map>

namespace eforder {

// Reference quasi-polynomial for N(G, m).
QuasiPolynomial golden_ngm(GroupType g, const std::string& data_dir = default_data_dir());

// Reference table of N(G2, m, s), one quasi-polynomial per s = 1..7.
std::map<int, QuasiPolynomial> golden_ng2ms(const std::string& data_dir = default_data_dir());

// Reference columns of 1152 * N(F4, m, s) for s = 1,2,3,4,6,8, each at
// its own post-cancellation period.
std::map<int, QuasiPolynomial> golden_nf4ms(const std::string& data_dir = default_data_dir());

struct GoldenPosetNode {
  std::vector<std::vector<long>> rows;  // sign-normalized row vectors
  int s = 0;
  int power = 0;                 // exponent of m in g_m
  std::vector<long> divisors;    // gcd divisor bag of g_m (entries > 1)
};

std::vector<GoldenPosetNode> golden_g2_poset_nodes(
    const std::string& data_dir = default_data_dir());

struct GoldenSwEntry {
  long size = 0;
  std::vector<int> word;
  std::vector<std::vector<long>> rows;
};

std::vector<GoldenSwEntry> golden_g2_sw(const std::string& data_dir = default_data_dir());

}  // namespace eforder
