#include "doctest.h"

#include "eforder/eigenposet.hpp"
#include "eforder/golden.hpp"
#include "eforder/oracle.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

using namespace eforder;

namespace {

IntRowVec rowvec(std::initializer_list<long> xs) {
  IntRowVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index j = 0;
  for (long x : xs) v(j++) = x;
  return v;
}

RowSet rows_to_set(const PMatrix& p, const std::vector<std::vector<long>>& rows) {
  RowSet set(static_cast<size_t>(p.size()));
  for (const auto& r : rows) {
    IntRowVec v(static_cast<Eigen::Index>(r.size()));
    for (size_t i = 0; i < r.size(); ++i) v(static_cast<Eigen::Index>(i)) = r[i];
    int idx = p.find_row(v);
    REQUIRE(idx >= 0);
    set.set(static_cast<size_t>(idx));
  }
  return set;
}

const MPoset& g2_poset() {
  static MPoset poset = build_m_poset(weight_system(GroupType::G2));
  return poset;
}

const EigenCountEngine& g2_engine() {
  static EigenCountEngine engine(GroupType::G2,
                                 conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate));
  return engine;
}

}  // namespace

TEST_SUITE_BEGIN("eigenposet");

TEST_CASE("G2 coincidence matrix has the nine published rows") {
  PMatrix p = build_p_matrix(weight_system(GroupType::G2));
  REQUIRE(p.size() == 9);
  std::vector<std::vector<long>> expected = {{1, 0},  {1, -1}, {2, -1}, {2, 0},  {0, 1},
                                             {3, -1}, {2, -2}, {3, -2}, {4, -2}};
  for (const auto& r : expected) {
    IntRowVec v(2);
    v(0) = r[0];
    v(1) = r[1];
    CHECK(p.find_row(v) >= 0);
  }
}

TEST_CASE("E6 coincidence matrix has 441 rows; F4 row count is frozen") {
  CHECK(build_p_matrix(weight_system(GroupType::E6)).size() == 441);
  PMatrix f4 = build_p_matrix(weight_system(GroupType::F4));
  CHECK(f4.size() <= 156);
  CHECK(f4.size() == 84);  // deduplicated candidate count, frozen after first construction
}

TEST_CASE("closure saturates row subsets") {
  PMatrix p = build_p_matrix(weight_system(GroupType::G2));
  MNode q = closure(rows_to_set(p, {{0, 1}, {3, -1}}), p);
  CHECK(q.rowset == rows_to_set(p, {{0, 1}, {3, -1}, {3, -2}}));
  CHECK(q.svalue == 3);

  MNode empty = closure(std::vector<int>{}, p);
  CHECK(empty.rowset.none());
  CHECK(empty.svalue == 7);

  std::vector<int> all(static_cast<size_t>(p.size()));
  std::iota(all.begin(), all.end(), 0);
  MNode full = closure(all, p);
  CHECK(full.rowset.count() == 9);
  CHECK(full.svalue == 1);
}

TEST_CASE("find_r values") {
  CHECK(find_r(build_p_matrix(weight_system(GroupType::G2))) == 2);
  // Degenerate one-row matrix.
  PMatrix tiny;
  tiny.group = GroupType::G2;
  PRow r;
  r.v = rowvec({1, 0});
  r.singles.push_back(1);
  tiny.rows.push_back(r);
  tiny.index[{1, 0}] = 0;
  tiny.single_row_of = {-1, 0, -1, -1};
  CHECK(find_r(tiny) == 1);
}

TEST_CASE("G2 closed poset matches the published 19-node table") {
  const MPoset& poset = g2_poset();
  REQUIRE(poset.size() == 19);
  CHECK(poset.r_bound == 2);
  auto golden = golden_g2_poset_nodes();
  REQUIRE(golden.size() == 19);
  std::set<int> matched;
  for (const auto& gn : golden) {
    RowSet set = rows_to_set(poset.p, gn.rows);
    int idx = poset.find_node(set);
    REQUIRE(idx >= 0);
    CHECK(!matched.count(idx));
    matched.insert(idx);
    const MNode& node = poset.nodes[static_cast<size_t>(idx)];
    CHECK(node.svalue == gn.s);
    CHECK(2 - node.rank == gn.power);
    std::vector<long> bag;
    for (const Int& d : node.divisors)
      if (d > 1) bag.push_back(d.get_si());
    CHECK(bag == gn.divisors);
  }
  CHECK(matched.size() == 19);
}

TEST_CASE("Moebius coefficient of the worked example") {
  const MPoset& poset = g2_poset();
  int s1 = poset.find_node(rows_to_set(poset.p, {{2, 0}, {2, -2}, {4, -2}}));
  REQUIRE(s1 >= 0);
  CHECK(mobius(poset, poset.full_node, s1) == 2);
  // mu(T, T) = 1 and mu over an incomparable pair is 0.
  CHECK(mobius(poset, s1, s1) == 1);
  int q = poset.find_node(rows_to_set(poset.p, {{0, 1}, {3, -1}, {3, -2}}));
  REQUIRE(q >= 0);
  CHECK(mobius(poset, q, s1) == 0);
}

TEST_CASE("f_m of the worked nodes") {
  const MPoset& poset = g2_poset();
  std::vector<GcdExpression> f = f_sym_all(poset);
  int s1 = poset.find_node(rows_to_set(poset.p, {{2, 0}, {2, -2}, {4, -2}}));
  int s2 = poset.find_node(
      rows_to_set(poset.p, {{2, -1}, {0, 1}, {2, 0}, {2, -2}, {4, -2}}));
  REQUIRE(s1 >= 0);
  REQUIRE(s2 >= 0);
  for (long m = 1; m <= 24; ++m) {
    CHECK(f[static_cast<size_t>(s1)].evaluate(m) == 0);
    CHECK(f[static_cast<size_t>(s2)].evaluate(m) == (m % 2 == 0 ? 1 : 0));
  }
  // At m = 1 only the full node carries the single grid point.
  for (int n = 0; n < poset.size(); ++n)
    CHECK(f[static_cast<size_t>(n)].evaluate(1) == (n == poset.full_node ? 1 : 0));
}

TEST_CASE("partition identity g_m = sum of f_m over finer nodes") {
  const MPoset& poset = g2_poset();
  std::vector<GcdExpression> f = f_sym_all(poset);
  for (int s = 0; s < poset.size(); ++s) {
    GcdExpression sum;
    for (int t = 0; t < poset.size(); ++t)
      if (poset.nodes[static_cast<size_t>(s)].rowset.is_subset_of(
              poset.nodes[static_cast<size_t>(t)].rowset))
        sum += f[static_cast<size_t>(t)];
    GcdExpression g = g_sym(poset.nodes[static_cast<size_t>(s)], 2);
    for (long m = 1; m <= 24; ++m) CHECK(sum.evaluate(m) == g.evaluate(m));
  }
}

TEST_CASE("S_w rows match the published table") {
  const WeightSystem& ws = weight_system(GroupType::G2);
  PMatrix p = build_p_matrix(ws);
  for (const auto& entry : golden_g2_sw()) {
    WeylElement w = element_from_word(GroupType::G2, entry.word);
    CHECK(s_w(w, ws, p) == rows_to_set(p, entry.rows));
  }
}

TEST_CASE("fix_s_count worked values") {
  const EigenCountEngine& engine = g2_engine();
  WeylElement s1 = simple_reflection(GroupType::G2, 1);
  WeylElement id = identity_element(GroupType::G2);
  for (long m = 1; m <= 12; ++m) {
    CHECK(engine.fix_s_count(s1, m, 2) == (m % 2 == 0 ? 1 : 0));
    CHECK(engine.fix_s_count(id, m, 1) == 1);
  }
  CHECK(engine.fix_s_count(id, 1, 7) == 0);
  // Sum over s recovers the plain fixed-point count.
  const WeightSystem& ws = weight_system(GroupType::G2);
  ConjugacyClassTable t = conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate);
  for (const auto& c : t.classes)
    for (long m = 1; m <= 8; ++m) {
      Int sum = 0;
      for (int s = 1; s <= engine.max_s(); ++s) sum += engine.fix_s_count(c.representative, m, s);
      CHECK(sum == fix_count(c.representative, ws, m));
    }
}

TEST_CASE("N(G2,m,s) against the published table") {
  const EigenCountEngine& engine = g2_engine();
  CHECK(engine.max_s() == 7);
  auto golden = golden_ng2ms();
  for (long m = 1; m <= 48; ++m)
    for (int s = 1; s <= 7; ++s) {
      CAPTURE(m);
      CAPTURE(s);
      REQUIRE(engine.n_gms(m, s) == evaluate(golden.at(s), m));
    }
  CHECK(engine.n_gms(12, 7) == 5);
}

TEST_CASE("completeness: eigenvalue counts partition N(G2,m)") {
  const EigenCountEngine& engine = g2_engine();
  OrderCounter counter(GroupType::G2, conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate));
  for (long m = 1; m <= 60; ++m) {
    Int sum = 0;
    for (int s = 1; s <= engine.max_s(); ++s) sum += engine.n_gms(m, s);
    CHECK(sum == counter.n_gm(m));
  }
}

TEST_CASE("f_m values stay nonnegative") {
  const MPoset& poset = g2_poset();
  std::vector<GcdExpression> f = f_sym_all(poset);
  for (int n = 0; n < poset.size(); ++n)
    for (long m = 1; m <= 100; ++m) CHECK(f[static_cast<size_t>(n)].evaluate(m) >= 0);
}

TEST_CASE("every grid point has a unique minimal node with the right s") {
  const MPoset& poset = g2_poset();
  const WeightSystem& ws = weight_system(GroupType::G2);
  for (long m = 1; m <= 6; ++m) {
    for (long k1 = 0; k1 < m; ++k1)
      for (long k2 = 0; k2 < m; ++k2) {
        RowSet ann(static_cast<size_t>(poset.p.size()));
        for (int r = 0; r < poset.p.size(); ++r) {
          const IntRowVec& v = poset.p.rows[static_cast<size_t>(r)].v;
          if ((v(0) * k1 + v(1) * k2) % m == 0) ann.set(static_cast<size_t>(r));
        }
        int idx = poset.find_node(ann);
        REQUIRE(idx >= 0);  // the annihilator is lattice-closed, hence a node
        int s_oracle =
            distinct_count(torus_eigen_exponents(ws, {Int(k1), Int(k2)}, m));
        CHECK(poset.nodes[static_cast<size_t>(idx)].svalue == s_oracle);
      }
  }
}

TEST_CASE("poset cache round-trips and revalidates") {
  const MPoset& poset = g2_poset();
  std::string path = "g2_poset_cache_test.txt";
  save_m_poset(poset, path);
  auto loaded = load_m_poset(weight_system(GroupType::G2), path);
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->size() == poset.size());
  for (int i = 0; i < poset.size(); ++i) {
    CHECK(loaded->nodes[static_cast<size_t>(i)].rowset == poset.nodes[static_cast<size_t>(i)].rowset);
    CHECK(loaded->nodes[static_cast<size_t>(i)].svalue == poset.nodes[static_cast<size_t>(i)].svalue);
  }
  // A corrupted cache must be rejected.
  {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t pos = text.find("node 7");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "node 6");
    std::ofstream out(path);
    out << text;
  }
  CHECK_THROWS_AS((void)load_m_poset(weight_system(GroupType::G2), path), DataIntegrityError);
  std::remove(path.c_str());
}

TEST_CASE("larger groups are refused") {
  CHECK_THROWS_AS((void)build_m_poset(weight_system(GroupType::E6)), std::invalid_argument);
  CHECK_THROWS_AS((void)build_m_poset(weight_system(GroupType::E7)), std::invalid_argument);
  CHECK_THROWS_AS((void)build_m_poset(weight_system(GroupType::E8)), std::invalid_argument);
}

TEST_SUITE_END();
