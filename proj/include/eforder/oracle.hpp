// oracle.hpp -- independent brute-force ground truth at desk scale:
// count W-orbits on the torus grid directly, with no Smith forms,
// posets, or Moebius inversion anywhere on the path.
#pragma once

#include "eforder/rootdata.hpp"

namespace eforder {

// Grid budgets (m^rank * |W| elementary steps) are fixed here: G2 up
// to m = 24 (~7k steps at the cap), F4 up to m = 6 (~1.5M).  Larger
// requests and the non-enumerable groups are refused.
bool oracle_in_budget(GroupType g, long m);

Int brute_n_gm(GroupType g, long m);
Int brute_n_gms(GroupType g, long m, int s);

// Orbit sizes of the grid action (test support; sizes divide |W|).
std::vector<long> brute_orbit_sizes(GroupType g, long m);

}  // namespace eforder
