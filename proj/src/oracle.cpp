#include "eforder/oracle.hpp"

#include "eforder/weyl.hpp"

#include <numeric>

namespace eforder {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct GridAction {
  GroupType g;
  long m;
  int l;
  long npoints;
  GroupEnumeration elems;

  long apply(size_t elem_idx, long point) const {
    // Decode base-m digits, act by the kaction on column vectors, re-encode.
    SmallMat k = elems.matrix(elem_idx);
    long digits[8];
    long acc = point;
    for (int i = 0; i < l; ++i) {
      digits[i] = acc % m;
      acc /= m;
    }
    long out = 0;
    for (int i = l - 1; i >= 0; --i) {
      long v = 0;
      for (int j = 0; j < l; ++j) v += static_cast<long>(k(i, j)) * digits[j];
      v %= m;
      if (v < 0) v += m;
      out = out * m + v;
    }
    return out;
  }
};

GridAction make_action(GroupType g, long m) {
  if (!oracle_in_budget(g, m))
    throw std::invalid_argument("oracle: request exceeds the documented grid budget");
  GridAction a{g, m, rank(g), ipow(m, rank(g)), enumerate_group(g)};
  return a;
}

int distinct_eigen_of_point(const WeightSystem& ws, long m, long point) {
  std::vector<Int> nums(static_cast<size_t>(rank(ws.group)));
  for (int i = 0; i < rank(ws.group); ++i) {
    nums[static_cast<size_t>(i)] = point % m;
    point /= m;
  }
  return distinct_count(torus_eigen_exponents(ws, nums, m));
}

template <typename Keep>
Int count_orbits(const GridAction& a, const Keep& keep, std::vector<long>* sizes) {
  std::vector<bool> visited(static_cast<size_t>(a.npoints), false);
  Int orbits = 0;
  std::vector<long> image;
  for (long p = 0; p < a.npoints; ++p) {
    if (visited[static_cast<size_t>(p)]) continue;
    if (!keep(p)) continue;
    long size = 0;
    for (size_t e = 0; e < a.elems.size(); ++e) {
      long q = a.apply(e, p);
      if (!visited[static_cast<size_t>(q)]) {
        visited[static_cast<size_t>(q)] = true;
        ++size;
      }
    }
    if (sizes) sizes->push_back(size);
    ++orbits;
  }
  return orbits;
}

}  // namespace

bool oracle_in_budget(GroupType g, long m) {
  if (m < 1) return false;
  switch (g) {
    case GroupType::G2: return m <= 24;
    case GroupType::F4: return m <= 6;
    default: return false;
  }
}

Int brute_n_gm(GroupType g, long m) {
  GridAction a = make_action(g, m);
  return count_orbits(a, [](long) { return true; }, nullptr);
}

Int brute_n_gms(GroupType g, long m, int s) {
  GridAction a = make_action(g, m);
  const WeightSystem& ws = weight_system(g);
  // Distinct-eigenvalue counts are constant on orbits, so filtering the
  // base point of each orbit is enough.
  return count_orbits(a, [&](long p) { return distinct_eigen_of_point(ws, m, p) == s; }, nullptr);
}

std::vector<long> brute_orbit_sizes(GroupType g, long m) {
  GridAction a = make_action(g, m);
  std::vector<long> sizes;
  count_orbits(a, [](long) { return true; }, &sizes);
  return sizes;
}

}  // namespace eforder
