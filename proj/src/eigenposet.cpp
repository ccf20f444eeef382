#include "eforder/eigenposet.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace eforder {

namespace {

std::vector<long> row_key(const IntRowVec& v) {
  std::vector<long> k(static_cast<size_t>(v.cols()));
  for (Eigen::Index i = 0; i < v.cols(); ++i) k[static_cast<size_t>(i)] = v(i).get_si();
  return k;
}

// Union-find on {0=[0], 1=[1/2], 2..u+1=[i]} (or 1..u for E6).
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

}  // namespace

int PMatrix::find_row(const IntRowVec& v) const {
  auto it = index.find(row_key(sign_normalize(v)));
  return it == index.end() ? -1 : it->second;
}

IntMatrix PMatrix::stacked(const RowSet& set) const {
  std::vector<IntRowVec> sel;
  for (size_t i = set.find_first(); i != RowSet::npos; i = set.find_next(i))
    sel.push_back(rows[i].v);
  return stack_rows(sel, rank(group));
}

std::uint64_t PMatrix::digest() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](long x) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<long>(rows.size()));
  for (const PRow& r : rows)
    for (Eigen::Index i = 0; i < r.v.cols(); ++i) mix(r.v(i).get_si());
  return h;
}

PMatrix build_p_matrix(const WeightSystem& ws) {
  PMatrix p;
  p.group = ws.group;
  auto add = [&p](const IntRowVec& raw, auto tagger) {
    IntRowVec v = sign_normalize(raw);
    if (is_zero(v)) return;  // coincidences of the form v_i - v_i
    auto key = row_key(v);
    auto it = p.index.find(key);
    if (it == p.index.end()) {
      p.rows.push_back(PRow{v, {}, {}, {}, {}});
      it = p.index.emplace(key, p.size() - 1).first;
    }
    tagger(p.rows[static_cast<size_t>(it->second)]);
  };
  for (int i = 1; i <= ws.u; ++i) {
    for (int j = i + 1; j <= ws.u; ++j) {
      add(IntRowVec(ws.vec(i) + ws.vec(j)),
          [i, j](PRow& r) { r.sums.emplace_back(i, j); });
      add(IntRowVec(ws.vec(i) - ws.vec(j)),
          [i, j](PRow& r) { r.diffs.emplace_back(i, j); });
    }
    add(ws.vec(i), [i](PRow& r) { r.singles.push_back(i); });
    add(IntRowVec(2 * ws.vec(i)), [i](PRow& r) { r.doubles.push_back(i); });
  }
  p.single_row_of.assign(static_cast<size_t>(ws.u + 1), -1);
  for (int idx = 0; idx < p.size(); ++idx)
    for (int i : p.rows[static_cast<size_t>(idx)].singles)
      p.single_row_of[static_cast<size_t>(i)] = idx;
  return p;
}

MNode closure(const RowSet& subset, const PMatrix& p) {
  MNode node;
  node.lattice = rhnf(p.stacked(subset));
  node.rowset.resize(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    if (in_row_lattice(p.rows[static_cast<size_t>(i)].v, node.lattice))
      node.rowset.set(static_cast<size_t>(i));
  node.divisors = elementary_divisors(node.lattice.basis);
  node.rank = static_cast<int>(node.lattice.rank());
  node.svalue = s_value(node.rowset, p, weight_system(p.group));
  return node;
}

MNode closure(const std::vector<int>& row_indices, const PMatrix& p) {
  RowSet set(static_cast<size_t>(p.size()));
  for (int i : row_indices) set.set(static_cast<size_t>(i));
  return closure(set, p);
}

namespace {

struct LatticeBfs {
  std::vector<MNode> nodes;
  int depth = 0;  // level at which the last new lattice appeared
};

// Breadth-first closure over row lattices of submatrices of P: level p
// holds exactly the lattices needing p rows to generate.  Extending a
// lattice by one row covers all (p+1)-row subsets because
// L(T + {v}) = L(basis(L(T)) + {v}).
LatticeBfs lattice_bfs(const PMatrix& p) {
  LatticeBfs out;
  std::map<std::string, int> seen;
  RowSet empty(static_cast<size_t>(p.size()));
  out.nodes.push_back(closure(empty, p));
  seen.emplace(lattice_key(out.nodes[0].lattice), 0);
  std::vector<int> frontier{0};
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<int> next;
    for (int idx : frontier) {
      // Note: nodes may reallocate while we append; copy what we need.
      const RowSet rowset = out.nodes[static_cast<size_t>(idx)].rowset;
      const IntMatrix basis = out.nodes[static_cast<size_t>(idx)].lattice.basis;
      for (int r = 0; r < p.size(); ++r) {
        if (rowset.test(static_cast<size_t>(r))) continue;
        IntMatrix stacked(basis.rows() + 1, basis.cols());
        stacked.topRows(basis.rows()) = basis;
        stacked.row(basis.rows()) = p.rows[static_cast<size_t>(r)].v;
        RowLattice lat = rhnf(stacked);
        std::string key = lattice_key(lat);
        auto it = seen.find(key);
        if (it != seen.end()) continue;
        MNode node;
        node.lattice = std::move(lat);
        node.rowset.resize(static_cast<size_t>(p.size()));
        for (int t = 0; t < p.size(); ++t)
          if (in_row_lattice(p.rows[static_cast<size_t>(t)].v, node.lattice))
            node.rowset.set(static_cast<size_t>(t));
        node.divisors = elementary_divisors(node.lattice.basis);
        node.rank = static_cast<int>(node.lattice.rank());
        node.svalue = s_value(node.rowset, p, weight_system(p.group));
        out.nodes.push_back(std::move(node));
        int new_idx = static_cast<int>(out.nodes.size()) - 1;
        seen.emplace(std::move(key), new_idx);
        next.push_back(new_idx);
        out.depth = level;
      }
    }
    frontier.swap(next);
  }
  return out;
}

void sort_poset_nodes(MPoset& poset) {
  std::sort(poset.nodes.begin(), poset.nodes.end(), [](const MNode& a, const MNode& b) {
    size_t ca = a.rowset.count(), cb = b.rowset.count();
    if (ca != cb) return ca > cb;
    return a.rowset < b.rowset;
  });
  poset.empty_node = poset.full_node = -1;
  for (int i = 0; i < poset.size(); ++i) {
    if (poset.nodes[static_cast<size_t>(i)].rowset.none()) poset.empty_node = i;
    if (poset.nodes[static_cast<size_t>(i)].rowset.all()) poset.full_node = i;
  }
  if (poset.empty_node < 0 || poset.full_node < 0)
    throw DataIntegrityError("m-poset: missing empty or full node");
}

}  // namespace

int find_r(const PMatrix& p) { return lattice_bfs(p).depth; }

int MPoset::find_node(const RowSet& rowset) const {
  for (int i = 0; i < size(); ++i)
    if (nodes[static_cast<size_t>(i)].rowset == rowset) return i;
  return -1;
}

MPoset build_m_poset(const WeightSystem& ws) {
  if (ws.group != GroupType::G2 && ws.group != GroupType::F4)
    throw std::invalid_argument(
        std::string("build_m_poset: ") + name(ws.group) +
        " is out of reach: already for E6 the lattice sweep would have to visit about 6e14 "
        "seven-row submatrices of the 441-row coincidence matrix");
  MPoset poset;
  poset.p = build_p_matrix(ws);
  LatticeBfs bfs = lattice_bfs(poset.p);
  poset.nodes = std::move(bfs.nodes);
  poset.r_bound = bfs.depth;
  sort_poset_nodes(poset);
  return poset;
}

Int mobius(const MPoset& poset, int t_idx, int s_idx) {
  const MNode& t = poset.nodes[static_cast<size_t>(t_idx)];
  const MNode& s = poset.nodes[static_cast<size_t>(s_idx)];
  // t <= s iff rowset(s) subset of rowset(t).
  if (!s.rowset.is_subset_of(t.rowset)) return 0;
  if (t_idx == s_idx) return 1;
  Int acc = 0;
  for (int u = 0; u < poset.size(); ++u) {
    const MNode& un = poset.nodes[static_cast<size_t>(u)];
    if (u == s_idx) continue;
    if (un.rowset.is_subset_of(t.rowset) && s.rowset.is_subset_of(un.rowset))
      acc += mobius(poset, t_idx, u);
  }
  return -acc;
}

int s_value(const RowSet& rowset, const PMatrix& p, const WeightSystem& ws) {
  const int u = ws.u;
  if (ws.group == GroupType::E6) {
    UnionFind uf(u + 1);  // 1..u
    for (size_t ri = rowset.find_first(); ri != RowSet::npos; ri = rowset.find_next(ri))
      for (auto [i, j] : p.rows[ri].diffs) uf.unite(i, j);
    std::vector<bool> root_seen(static_cast<size_t>(u + 1), false);
    int classes = 0;
    for (int i = 1; i <= u; ++i) {
      int r = uf.find(i);
      if (!root_seen[static_cast<size_t>(r)]) {
        root_seen[static_cast<size_t>(r)] = true;
        ++classes;
      }
    }
    return classes;
  }

  UnionFind uf(u + 2);  // 0=[0], 1=[1/2], i+1=[i]
  std::vector<bool> in_zero(static_cast<size_t>(u + 1), false);
  for (size_t ri = rowset.find_first(); ri != RowSet::npos; ri = rowset.find_next(ri)) {
    const PRow& row = p.rows[ri];
    for (auto [i, j] : row.sums) uf.unite(i + 1, j + 1);
    for (auto [i, j] : row.diffs) uf.unite(i + 1, j + 1);
    for (int i : row.singles) uf.unite(0, i + 1);
  }
  for (size_t ri = rowset.find_first(); ri != RowSet::npos; ri = rowset.find_next(ri)) {
    for (int i : p.rows[ri].doubles) {
      int single_row = p.single_row_of[static_cast<size_t>(i)];
      bool vi_present = single_row >= 0 && rowset.test(static_cast<size_t>(single_row));
      if (!vi_present) uf.unite(1, i + 1);
    }
  }
  std::vector<bool> root_seen(static_cast<size_t>(u + 2), false);
  int classes = 0;
  for (int e = 0; e < u + 2; ++e) {
    int r = uf.find(e);
    if (!root_seen[static_cast<size_t>(r)]) {
      root_seen[static_cast<size_t>(r)] = true;
      ++classes;
    }
  }
  bool half_nontrivial = false, zero_nontrivial = false;
  for (int i = 1; i <= u; ++i) {
    if (uf.find(i + 1) == uf.find(1)) half_nontrivial = true;
    if (uf.find(i + 1) == uf.find(0)) zero_nontrivial = true;
  }
  // Each weight class off [0] and [1/2] contributes a pair of distinct
  // eigenvalues; 1 is present when a one-slot exists or some P_i = 0;
  // -1 is present exactly when [1/2] is nontrivial.
  bool one_present = ws.one_slots > 0 || zero_nontrivial;
  return 2 * classes - 4 + (one_present ? 1 : 0) + (half_nontrivial ? 1 : 0);
}

GcdExpression g_sym(const MNode& node, int rank) {
  return GcdExpression::monomial(1, rank - node.rank, node.divisors);
}

Int g_m(const MNode& node, int rank, const Int& m) {
  return kernel_count_from_divisors(node.divisors, rank, m);
}

RowSet s_w(const WeylElement& w, const WeightSystem& ws, const PMatrix& p) {
  RowSet set(static_cast<size_t>(p.size()));
  for (int i : ws.spanning) {
    int s = w.sigma(i);
    IntRowVec row;
    if (s == i) continue;
    if (s == -i)
      row = 2 * ws.vec(i);
    else if (s > 0)
      row = ws.vec(i) - ws.vec(s);
    else
      row = ws.vec(i) + ws.vec(-s);
    int idx = p.find_row(row);
    if (idx < 0)
      throw DataIntegrityError("s_w: fixed-locus row is not a P row (weight data corrupt)");
    set.set(static_cast<size_t>(idx));
  }
  return set;
}

std::vector<GcdExpression> f_sym_all(const MPoset& poset) {
  // Nodes are sorted by decreasing rowset size, so every strict
  // superset of a node precedes it.
  const int l = rank(poset.p.group);
  std::vector<GcdExpression> f(static_cast<size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i) {
    const MNode& node = poset.nodes[static_cast<size_t>(i)];
    GcdExpression acc = g_sym(node, l);
    for (int t = 0; t < i; ++t) {
      if (node.rowset.is_subset_of(poset.nodes[static_cast<size_t>(t)].rowset))
        acc -= f[static_cast<size_t>(t)];
    }
    f[static_cast<size_t>(i)] = std::move(acc);
  }
  return f;
}

void save_m_poset(const MPoset& poset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write poset cache: " + path);
  out << "eforder-mposet-cache v1\n";
  out << "group " << name(poset.p.group) << "\n";
  out << "pmatrix-digest " << std::hex << poset.p.digest() << std::dec << "\n";
  out << "r-bound " << poset.r_bound << "\n";
  out << "nodes " << poset.size() << "\n";
  for (const MNode& n : poset.nodes) {
    out << "node " << n.svalue << " " << n.rank << " " << n.divisors.size();
    for (const Int& d : n.divisors) out << " " << d.get_str();
    out << " " << n.rowset.count();
    for (size_t i = n.rowset.find_first(); i != RowSet::npos; i = n.rowset.find_next(i))
      out << " " << i;
    out << "\n";
  }
}

std::optional<MPoset> load_m_poset(const WeightSystem& ws, const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  MPoset poset;
  poset.p = build_p_matrix(ws);
  std::string line, tag;
  if (!std::getline(in, line) || line != "eforder-mposet-cache v1")
    throw DataIntegrityError("poset cache: bad header in " + path);
  std::string gname;
  in >> tag >> gname;
  if (tag != "group" || gname != name(ws.group))
    throw DataIntegrityError("poset cache: group mismatch in " + path);
  std::uint64_t digest = 0;
  in >> tag >> std::hex >> digest >> std::dec;
  if (tag != "pmatrix-digest" || digest != poset.p.digest())
    throw DataIntegrityError("poset cache: coincidence-matrix digest mismatch in " + path);
  int nodes = 0;
  in >> tag >> poset.r_bound;
  if (tag != "r-bound") throw DataIntegrityError("poset cache: missing r-bound");
  in >> tag >> nodes;
  if (tag != "nodes" || nodes <= 0) throw DataIntegrityError("poset cache: missing node count");
  for (int k = 0; k < nodes; ++k) {
    in >> tag;
    if (tag != "node") throw DataIntegrityError("poset cache: truncated node list");
    MNode n;
    size_t ndiv = 0, nrows = 0;
    in >> n.svalue >> n.rank >> ndiv;
    for (size_t i = 0; i < ndiv; ++i) {
      std::string d;
      in >> d;
      n.divisors.emplace_back(d);
    }
    in >> nrows;
    n.rowset.resize(static_cast<size_t>(poset.p.size()));
    for (size_t i = 0; i < nrows; ++i) {
      size_t r = 0;
      in >> r;
      n.rowset.set(r);
    }
    if (!in) throw DataIntegrityError("poset cache: parse error");
    // Revalidate: the stored rowset must be lattice-closed and carry
    // the divisors and s-value it claims.
    MNode fresh = closure(n.rowset, poset.p);
    if (fresh.rowset != n.rowset || fresh.divisors != n.divisors || fresh.svalue != n.svalue)
      throw DataIntegrityError("poset cache: node fails closure revalidation");
    n.lattice = std::move(fresh.lattice);
    n.rank = fresh.rank;
    poset.nodes.push_back(std::move(n));
  }
  sort_poset_nodes(poset);
  return poset;
}

EigenCountEngine::EigenCountEngine(GroupType g, ConjugacyClassTable table,
                                   const std::string& cache_dir)
    : group_(g), table_(std::move(table)) {
  const WeightSystem& ws = weight_system(g);
  std::string cache_path;
  if (!cache_dir.empty())
    cache_path = cache_dir + "/mposet_" + name(g) + ".txt";
  bool loaded = false;
  if (!cache_path.empty()) {
    if (auto cached = load_m_poset(ws, cache_path)) {
      poset_ = std::move(*cached);
      loaded = true;
    }
  }
  if (!loaded) {
    poset_ = build_m_poset(ws);
    if (!cache_path.empty()) save_m_poset(poset_, cache_path);
  }
  fsym_ = f_sym_all(poset_);
  max_s_ = poset_.nodes[static_cast<size_t>(poset_.empty_node)].svalue;

  for (const ConjugacyClass& c : table_.classes)
    class_sw_.push_back(s_w(c.representative, ws, poset_.p));

  // Column expressions: N(G, m, s) = (1/|W|) sum_c |c| sum_{S <= S_w,
  // s(S)=s} f_m(S); swap the sums and weight every node by the classes
  // whose S_w it contains.
  column_.assign(static_cast<size_t>(max_s_ + 1), GcdExpression());
  Rat inv_order(1, static_cast<unsigned long>(weyl_order(g)));
  for (int n = 0; n < poset_.size(); ++n) {
    const MNode& node = poset_.nodes[static_cast<size_t>(n)];
    Int weight = 0;
    for (size_t ci = 0; ci < table_.classes.size(); ++ci)
      if (class_sw_[ci].is_subset_of(node.rowset)) weight += table_.classes[ci].size;
    if (weight == 0) continue;
    GcdExpression contrib = fsym_[static_cast<size_t>(n)];
    contrib *= Rat(weight) * inv_order;
    column_[static_cast<size_t>(node.svalue)] += contrib;
  }
}

Int EigenCountEngine::fix_s_count(const WeylElement& w, const Int& m, int s) const {
  if (s < 1 || s > max_s_) throw std::invalid_argument("fix_s_count: s out of range");
  const WeightSystem& ws = weight_system(group_);
  RowSet sw = s_w(w, ws, poset_.p);
  Int acc = 0;
  for (int n = 0; n < poset_.size(); ++n) {
    const MNode& node = poset_.nodes[static_cast<size_t>(n)];
    if (node.svalue != s) continue;
    if (sw.is_subset_of(node.rowset)) acc += fsym_[static_cast<size_t>(n)].evaluate(m);
  }
  return acc;
}

Int EigenCountEngine::n_gms(const Int& m, int s) const {
  if (s < 1 || s > max_s_) return 0;
  Int v = column_[static_cast<size_t>(s)].evaluate(m);
  if (v < 0) throw DataIntegrityError("n_gms: negative count");
  return v;
}

GcdExpression EigenCountEngine::n_gms_symbolic(int s) const {
  if (s < 1 || s > max_s_) throw std::invalid_argument("n_gms_symbolic: s out of range");
  return column_[static_cast<size_t>(s)];
}

}  // namespace eforder
