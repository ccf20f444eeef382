#include "eforder/rootdata.hpp"

#include "eforder/hermite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace eforder {

namespace {

struct GroupTraits {
  int rank;
  std::uint64_t weyl_order;
  int class_count;
  long period;
  int u;
  int one_slots;
  bool paired;
  const char* name;
};

const GroupTraits& traits(GroupType g) {
  static const GroupTraits table[5] = {
      {2, 12ull, 6, 6, 3, 1, true, "G2"},
      {4, 1152ull, 25, 12, 12, 1, true, "F4"},
      {6, 51840ull, 25, 6, 27, 0, false, "E6"},
      {7, 2903040ull, 60, 12, 28, 0, true, "E7"},
      {8, 696729600ull, 112, 60, 120, 8, true, "E8"},
  };
  return table[static_cast<int>(g)];
}

SmallMat small_cartan(GroupType g) {
  const int l = traits(g).rank;
  SmallMat c = SmallMat::Zero(l, l);
  for (int i = 0; i < l; ++i) c(i, i) = 2;
  auto link = [&](int a, int b) {  // 1-based, simply-laced edge
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  switch (g) {
    case GroupType::G2:
      c(0, 1) = -1;  // <alpha_1, alpha_2^vee>, alpha_1 short
      c(1, 0) = -3;
      break;
    case GroupType::F4:
      link(1, 2);
      link(3, 4);
      c(1, 2) = -2;  // alpha_2 long, alpha_3 short
      c(2, 1) = -1;
      break;
    case GroupType::E6:
      link(1, 3); link(3, 4); link(4, 5); link(5, 6); link(2, 4);
      break;
    case GroupType::E7:
      link(1, 3); link(3, 4); link(4, 5); link(5, 6); link(6, 7); link(2, 4);
      break;
    case GroupType::E8:
      link(1, 3); link(3, 4); link(4, 5); link(5, 6); link(6, 7); link(7, 8); link(2, 4);
      break;
  }
  return c;
}

std::vector<int> coords_key(const SmallRowVec& v) {
  return std::vector<int>(v.data(), v.data() + v.cols());
}

// Orbit of `start` under the simple reflections acting on row vectors
// in the given coordinate reflection rule.
std::vector<SmallRowVec> orbit_closure(const SmallRowVec& start,
                                       const std::function<SmallRowVec(const SmallRowVec&, int)>& reflect,
                                       int l) {
  std::vector<SmallRowVec> out;
  std::set<std::vector<int>> seen;
  out.push_back(start);
  seen.insert(coords_key(start));
  for (size_t h = 0; h < out.size(); ++h) {
    SmallRowVec cur = out[h];
    for (int j = 0; j < l; ++j) {
      SmallRowVec img = reflect(cur, j);
      if (seen.insert(coords_key(img)).second) out.push_back(img);
    }
  }
  return out;
}

RootSystem build_root_system(GroupType g) {
  const int l = traits(g).rank;
  const SmallMat c = small_cartan(g);
  // Reflection in simple-root coordinates: only coordinate j moves.
  auto reflect = [&](const SmallRowVec& v, int j) {
    SmallRowVec r = v;
    int pairing = 0;
    for (int i = 0; i < l; ++i) pairing += v(i) * c(i, j);
    r(j) -= pairing;
    return r;
  };
  SmallRowVec alpha = SmallRowVec::Zero(l);
  std::vector<SmallRowVec> roots;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < l; ++i) {
    alpha.setZero();
    alpha(i) = 1;
    for (const auto& r : orbit_closure(alpha, reflect, l))
      if (seen.insert(coords_key(r)).second) roots.push_back(r);
  }
  std::vector<SmallRowVec> pos, neg;
  for (const auto& r : roots) {
    bool negative = false;
    for (int i = 0; i < l; ++i)
      if (r(i) < 0) negative = true;
    (negative ? neg : pos).push_back(r);
  }
  auto lex = [l](const SmallRowVec& a, const SmallRowVec& b) {
    for (int i = 0; i < l; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  };
  std::sort(pos.begin(), pos.end(), lex);

  RootSystem rs;
  rs.group = g;
  rs.positive_count = static_cast<int>(pos.size());
  const int n = 2 * rs.positive_count;
  rs.simple_coords.resize(n, l);
  rs.weight_coords.resize(n, l);
  for (int i = 0; i < rs.positive_count; ++i) {
    rs.simple_coords.row(i) = pos[static_cast<size_t>(i)];
    rs.simple_coords.row(i + rs.positive_count) = -pos[static_cast<size_t>(i)];
  }
  for (int i = 0; i < n; ++i) rs.weight_coords.row(i) = rs.simple_coords.row(i) * c;
  return rs;
}

WeightSystem build_weight_system(GroupType g) {
  const GroupTraits& tr = traits(g);
  const int l = tr.rank;
  const SmallMat c = small_cartan(g);
  // Reflection on weight rows: v' = v - v_j * (row j of the Cartan matrix).
  auto reflect = [&](const SmallRowVec& v, int j) {
    SmallRowVec r = v;
    if (v(j) != 0) r -= v(j) * c.row(j);
    return r;
  };
  SmallRowVec dominant = SmallRowVec::Zero(l);
  switch (g) {
    case GroupType::G2: dominant(0) = 1; break;  // 7-dim, highest short root
    case GroupType::F4: dominant(3) = 1; break;  // 26-dim, highest short root
    case GroupType::E6: dominant(0) = 1; break;  // minuscule 27
    case GroupType::E7: dominant(6) = 1; break;  // minuscule 56
    case GroupType::E8: dominant(7) = 1; break;  // adjoint 248
  }
  std::vector<SmallRowVec> orbit = orbit_closure(dominant, reflect, l);

  WeightSystem ws;
  ws.group = g;
  ws.one_slots = tr.one_slots;
  ws.paired = tr.paired;

  std::vector<SmallRowVec> kept;
  if (tr.paired) {
    std::set<std::vector<int>> seen;
    for (const auto& v : orbit) {
      SmallRowVec n = v;
      for (int i = 0; i < l; ++i)
        if (v(i) != 0) {
          if (v(i) < 0) n = -v;
          break;
        }
      if (seen.insert(coords_key(n)).second) kept.push_back(n);
    }
    if (kept.size() * 2 != orbit.size())
      throw DataIntegrityError("weight_system: orbit not closed under negation");
  } else {
    kept.assign(orbit.begin(), orbit.end());
  }
  auto lex = [l](const SmallRowVec& a, const SmallRowVec& b) {
    for (int i = 0; i < l; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  };
  std::sort(kept.begin(), kept.end(), lex);

  ws.u = static_cast<int>(kept.size());
  if (ws.u != tr.u) throw DataIntegrityError("weight_system: unexpected orbit size");
  for (const auto& v : kept) {
    IntRowVec row(l);
    bool zero = true;
    for (int i = 0; i < l; ++i) {
      row(i) = v(i);
      if (v(i) != 0) zero = false;
    }
    if (zero) throw DataIntegrityError("weight_system: zero weight vector");
    ws.vectors.push_back(row);
  }
  // The full stack must generate Z^rank: t(k) is trivial only at k in Z^rank.
  RowLattice full = rhnf(stack_rows(ws.vectors, l));
  if (!eq(full.basis, identity_matrix(l)))
    throw DataIntegrityError("weight_system: weight stack does not span Z^rank");
  ws.spanning = spanning_indices(ws);
  return ws;
}

bool dfs_spanning(const WeightSystem& ws, int next, std::vector<int>& chosen,
                  std::vector<IntRowVec>& rows) {
  const int l = rank(ws.group);
  if (static_cast<int>(chosen.size()) == l) {
    RowLattice lat = rhnf(stack_rows(rows, l));
    return eq(lat.basis, identity_matrix(l));
  }
  const int need = l - static_cast<int>(chosen.size());
  for (int i = next; i <= ws.u - need + 1; ++i) {
    rows.push_back(ws.vec(i));
    // Every row of a spanning rank-sized subset must raise the rank.
    if (rhnf(stack_rows(rows, l)).rank() == static_cast<Eigen::Index>(rows.size())) {
      chosen.push_back(i);
      if (dfs_spanning(ws, i + 1, chosen, rows)) return true;
      chosen.pop_back();
    }
    rows.pop_back();
  }
  return false;
}

}  // namespace

int rank(GroupType g) { return traits(g).rank; }
std::uint64_t weyl_order(GroupType g) { return traits(g).weyl_order; }
int expected_class_count(GroupType g) { return traits(g).class_count; }
long ngm_period(GroupType g) { return traits(g).period; }
const char* name(GroupType g) { return traits(g).name; }

std::optional<GroupType> parse_group(const std::string& s) {
  for (GroupType g : kAllGroups)
    if (s == traits(g).name) return g;
  return std::nullopt;
}

IntMatrix cartan_matrix(GroupType g) { return to_int_matrix(small_cartan(g)); }

int RootSystem::index_of_simple(const SmallRowVec& c) const {
  for (int i = 0; i < size(); ++i)
    if (simple_coords.row(i) == c) return i;
  return -1;
}

int RootSystem::index_of_weight(const SmallRowVec& c) const {
  for (int i = 0; i < size(); ++i)
    if (weight_coords.row(i) == c) return i;
  return -1;
}

const RootSystem& root_system(GroupType g) {
  static std::map<GroupType, RootSystem> cache;
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build_root_system(g)).first;
  return it->second;
}

const WeightSystem& weight_system(GroupType g) {
  static std::map<GroupType, WeightSystem> cache;
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build_weight_system(g)).first;
  return it->second;
}

std::vector<int> spanning_indices(const WeightSystem& ws) {
  std::vector<int> chosen;
  std::vector<IntRowVec> rows;
  if (!dfs_spanning(ws, 1, chosen, rows))
    throw DataIntegrityError("spanning_indices: no spanning subset found");
  return chosen;
}

std::vector<Rat> torus_eigen_exponents(const WeightSystem& ws, const std::vector<Int>& nums,
                                       const Int& m) {
  if (m < 1) throw std::invalid_argument("torus_eigen_exponents: m must be >= 1");
  if (static_cast<int>(nums.size()) != rank(ws.group))
    throw std::invalid_argument("torus_eigen_exponents: wrong k length");
  std::vector<Rat> out;
  for (int s = 0; s < ws.one_slots; ++s) out.emplace_back(0);
  for (const IntRowVec& v : ws.vectors) {
    Int dot = 0;
    for (Eigen::Index i = 0; i < v.cols(); ++i) dot += v(i) * nums[static_cast<size_t>(i)];
    Int e;
    mpz_fdiv_r(e.get_mpz_t(), dot.get_mpz_t(), m.get_mpz_t());
    Rat f(e, m);
    f.canonicalize();
    out.push_back(f);
    if (ws.paired) {
      Int en;
      Int neg = -dot;
      mpz_fdiv_r(en.get_mpz_t(), neg.get_mpz_t(), m.get_mpz_t());
      Rat fn(en, m);
      fn.canonicalize();
      out.push_back(fn);
    }
  }
  return out;
}

int distinct_count(const std::vector<Rat>& exponents) {
  std::vector<Rat> v = exponents;
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace eforder
