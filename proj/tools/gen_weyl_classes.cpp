// gen_weyl_classes.cpp -- one-off generator for the embedded conjugacy
// class data file (data/weyl_conjugacy_classes.txt).
//
// Classes are computed exactly, with no external tables: starting from
// a deterministic seed stream (generators, random words, powers and
// pairwise products of representatives already found), each fresh seed
// is expanded into its full conjugacy class by closing under
// conjugation with the simple reflections.  A class is "fresh" when
// its invariant tuple (element order, characteristic polynomial, root
// cycle type, elementary divisors of K - I) has not been seen.  The
// run is complete exactly when the class sizes sum to |W|, which
// certifies that the invariant tuples separated every class.
//
// Elements are stored as 8-byte codes: the images of the simple roots
// under the element, as indices into the root list.  This keeps the
// E8 sweep (696,729,600 elements overall, largest class ~6 x 10^7)
// within a ~1.5 GB working set.  Expect the E8 run to take on the
// order of an hour; the other groups finish in seconds or minutes.
//
// Usage: gen_weyl_classes G2 F4 E6 E7 E8 > classes.txt

#include "eforder/rootdata.hpp"
#include "eforder/smith.hpp"
#include "eforder/weyl.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <deque>
#include <iostream>
#include <map>
#include <numeric>
#include <algorithm>
#include <sstream>
#include <vector>

namespace {

using eforder::GroupType;
using eforder::Int;
using Code = std::uint64_t;
constexpr Code kNoCode = ~Code(0);

struct Mat8 {
  // Column-major action on simple-root coordinates: col i = w(alpha_i).
  std::array<std::int8_t, 64> a{};
  int l = 0;

  std::int8_t& at(int r, int c) { return a[static_cast<size_t>(c * 8 + r)]; }
  std::int8_t at(int r, int c) const { return a[static_cast<size_t>(c * 8 + r)]; }
};

struct Ctx {
  GroupType g;
  int l = 0;
  int nroots = 0;
  int npos = 0;
  std::vector<std::array<std::int8_t, 8>> rootc;  // simple-root coordinates
  std::vector<int> simple_idx;                    // index of alpha_i
  std::vector<std::vector<std::uint16_t>> perm;   // perm[j][r] = s_{j+1}(r)
  std::vector<std::array<std::uint16_t, 8>> pre;  // pre[j][i] = perm[j][simple_idx[i]]
  // Root lookup: open-addressed table keyed by packed coordinates.
  std::vector<std::pair<Code, std::uint16_t>> tab;
  Code tab_mask = 0;

  Code pack_coords(const std::int8_t* c) const {
    Code k = 0;
    for (int i = 0; i < l; ++i) k |= Code(static_cast<std::uint8_t>(c[i] + 64)) << (8 * i);
    return k;
  }
  int lookup(const std::int8_t* c) const {
    Code key = pack_coords(c);
    size_t h = (key * 0x9E3779B97F4A7C15ull) & tab_mask;
    for (;;) {
      if (tab[h].first == key) return tab[h].second;
      if (tab[h].first == kNoCode) return -1;
      h = (h + 1) & tab_mask;
    }
  }
};

Ctx build_ctx(GroupType g) {
  const eforder::RootSystem& rs = eforder::root_system(g);
  Ctx c;
  c.g = g;
  c.l = eforder::rank(g);
  c.nroots = rs.size();
  c.npos = rs.positive_count;
  c.rootc.resize(static_cast<size_t>(c.nroots));
  for (int r = 0; r < c.nroots; ++r) {
    c.rootc[static_cast<size_t>(r)].fill(0);
    for (int i = 0; i < c.l; ++i)
      c.rootc[static_cast<size_t>(r)][static_cast<size_t>(i)] =
          static_cast<std::int8_t>(rs.simple_coords(r, i));
  }
  size_t ts = 1;
  while (ts < static_cast<size_t>(c.nroots) * 4) ts <<= 1;
  c.tab.assign(ts, {kNoCode, 0});
  c.tab_mask = ts - 1;
  for (int r = 0; r < c.nroots; ++r) {
    Code key = c.pack_coords(c.rootc[static_cast<size_t>(r)].data());
    size_t h = (key * 0x9E3779B97F4A7C15ull) & c.tab_mask;
    while (c.tab[h].first != kNoCode) h = (h + 1) & c.tab_mask;
    c.tab[h] = {key, static_cast<std::uint16_t>(r)};
  }
  c.simple_idx.resize(static_cast<size_t>(c.l));
  for (int i = 0; i < c.l; ++i) {
    std::array<std::int8_t, 8> e{};
    e[static_cast<size_t>(i)] = 1;
    c.simple_idx[static_cast<size_t>(i)] = c.lookup(e.data());
  }
  // Simple reflections as root permutations.
  eforder::SmallMat cart = eforder::to_small_matrix(eforder::cartan_matrix(g));
  c.perm.assign(static_cast<size_t>(c.l), std::vector<std::uint16_t>(static_cast<size_t>(c.nroots)));
  for (int j = 0; j < c.l; ++j)
    for (int r = 0; r < c.nroots; ++r) {
      std::array<std::int8_t, 8> img = c.rootc[static_cast<size_t>(r)];
      int pairing = 0;
      for (int i = 0; i < c.l; ++i) pairing += img[static_cast<size_t>(i)] * cart(i, j);
      img[static_cast<size_t>(j)] = static_cast<std::int8_t>(img[static_cast<size_t>(j)] - pairing);
      int idx = c.lookup(img.data());
      if (idx < 0) throw std::runtime_error("reflection image not a root");
      c.perm[static_cast<size_t>(j)][static_cast<size_t>(r)] = static_cast<std::uint16_t>(idx);
    }
  c.pre.assign(static_cast<size_t>(c.l), {});
  for (int j = 0; j < c.l; ++j)
    for (int i = 0; i < c.l; ++i)
      c.pre[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          c.perm[static_cast<size_t>(j)][static_cast<size_t>(c.simple_idx[static_cast<size_t>(i)])];
  return c;
}

Code code_of_identity(const Ctx& c) {
  Code k = kNoCode;
  for (int i = 0; i < c.l; ++i) {
    k &= ~(Code(0xFF) << (8 * i));
    k |= Code(static_cast<std::uint32_t>(c.simple_idx[static_cast<size_t>(i)])) << (8 * i);
  }
  return k;
}

Code pack_images(const Ctx& c, const std::uint16_t* img) {
  Code k = kNoCode;
  for (int i = 0; i < c.l; ++i) {
    k &= ~(Code(0xFF) << (8 * i));
    k |= Code(img[i]) << (8 * i);
  }
  return k;
}

Mat8 mat_from_code(const Ctx& c, Code code) {
  Mat8 m;
  m.l = c.l;
  for (int i = 0; i < c.l; ++i) {
    int r = static_cast<int>((code >> (8 * i)) & 0xFF);
    const auto& rc = c.rootc[static_cast<size_t>(r)];
    for (int t = 0; t < c.l; ++t) m.at(t, i) = rc[static_cast<size_t>(t)];
  }
  return m;
}

inline int apply_mat(const Ctx& c, const Mat8& m, int root) {
  const auto& rc = c.rootc[static_cast<size_t>(root)];
  std::int8_t out[8];
  for (int t = 0; t < c.l; ++t) {
    int acc = 0;
    for (int i = 0; i < c.l; ++i) acc += m.at(t, i) * rc[static_cast<size_t>(i)];
    out[t] = static_cast<std::int8_t>(acc);
  }
  return c.lookup(out);
}

// code of s_j w s_j (generators are involutions).
inline Code conj_by_gen(const Ctx& c, const Mat8& m, int j) {
  std::uint16_t img[8];
  const auto& pj = c.perm[static_cast<size_t>(j)];
  for (int i = 0; i < c.l; ++i) {
    int t = c.pre[static_cast<size_t>(j)][static_cast<size_t>(i)];
    int w = apply_mat(c, m, t);
    img[i] = pj[static_cast<size_t>(w)];
  }
  return pack_images(c, img);
}

Code code_mul(const Ctx& c, Code a, Code b) {
  // (a*b)(alpha_i) = a(b(alpha_i))
  Mat8 ma = mat_from_code(c, a);
  std::uint16_t img[8];
  for (int i = 0; i < c.l; ++i) {
    int t = static_cast<int>((b >> (8 * i)) & 0xFF);
    img[i] = static_cast<std::uint16_t>(apply_mat(c, ma, t));
  }
  return pack_images(c, img);
}

// Open-addressed insert-only set of codes.
class CodeSet {
 public:
  explicit CodeSet(size_t initial = 1 << 16) { reset(initial); }
  void reset(size_t cap) {
    size_t s = 1;
    while (s < cap * 2) s <<= 1;
    slots_.assign(s, kNoCode);
    mask_ = s - 1;
    count_ = 0;
  }
  size_t size() const { return count_; }
  bool insert(Code k) {
    if (count_ * 10 >= (mask_ + 1) * 6) grow();
    size_t h = hash(k);
    for (;;) {
      Code cur = slots_[h];
      if (cur == k) return false;
      if (cur == kNoCode) {
        slots_[h] = k;
        ++count_;
        return true;
      }
      h = (h + 1) & mask_;
    }
  }

 private:
  static size_t hash_raw(Code k) {
    k ^= k >> 33;
    k *= 0xFF51AFD7ED558CCDull;
    k ^= k >> 33;
    k *= 0xC4CEB9FE1A85EC53ull;
    k ^= k >> 33;
    return k;
  }
  size_t hash(Code k) const { return hash_raw(k) & mask_; }
  void grow() {
    std::vector<Code> old;
    old.swap(slots_);
    slots_.assign((mask_ + 1) * 2, kNoCode);
    mask_ = slots_.size() - 1;
    for (Code k : old) {
      if (k == kNoCode) continue;
      size_t h = hash(k);
      while (slots_[h] != kNoCode) h = (h + 1) & mask_;
      slots_[h] = k;
    }
  }
  std::vector<Code> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

std::vector<int> word_of(const Ctx& c, Code code);

// Squared root norms, normalized so short roots have norm 1; used to
// type the cycle structure (plain cycle types cannot tell the two
// reflection classes of G2 apart).
std::vector<int> root_norms(const Ctx& c) {
  eforder::SmallMat cart = eforder::to_small_matrix(eforder::cartan_matrix(c.g));
  // Symmetrize: (alpha_i, alpha_j) proportional to cart(i,j) * d_j with
  // d_j read off from the Cartan asymmetry.
  std::vector<long> d(static_cast<size_t>(c.l), 0);
  d[0] = (c.g == GroupType::G2) ? 1 : 2;  // seeded; propagate across edges
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < c.l; ++i)
      for (int j = 0; j < c.l; ++j) {
        if (i == j || cart(i, j) == 0) continue;
        if (d[static_cast<size_t>(i)] != 0 && d[static_cast<size_t>(j)] == 0) {
          // cart(i,j) d_j == cart(j,i) d_i
          d[static_cast<size_t>(j)] = d[static_cast<size_t>(i)] * cart(j, i) / cart(i, j);
          changed = true;
        }
      }
  }
  std::vector<int> norms(static_cast<size_t>(c.nroots));
  long minn = 0;
  for (int r = 0; r < c.nroots; ++r) {
    const auto& rc = c.rootc[static_cast<size_t>(r)];
    long acc = 0;
    for (int i = 0; i < c.l; ++i)
      for (int j = 0; j < c.l; ++j)
        acc += static_cast<long>(rc[static_cast<size_t>(i)]) * rc[static_cast<size_t>(j)] *
               cart(i, j) * d[static_cast<size_t>(j)];
    norms[static_cast<size_t>(r)] = static_cast<int>(acc);
    if (minn == 0 || acc < minn) minn = acc;
  }
  for (int& n : norms) n = static_cast<int>(n / minn);
  return norms;
}

std::string fingerprint(const Ctx& c, Code code) {
  static std::map<GroupType, std::vector<int>> norm_cache;
  auto nit = norm_cache.find(c.g);
  if (nit == norm_cache.end()) nit = norm_cache.emplace(c.g, root_norms(c)).first;
  const std::vector<int>& norms = nit->second;

  Mat8 m0 = mat_from_code(c, code);
  // Cycle type of the root permutation, split by root length.
  std::vector<std::uint16_t> p(static_cast<size_t>(c.nroots));
  for (int r = 0; r < c.nroots; ++r)
    p[static_cast<size_t>(r)] = static_cast<std::uint16_t>(apply_mat(c, m0, r));
  std::vector<std::pair<int, int>> cyc;  // (norm of cycle start, length)
  std::vector<bool> seen(static_cast<size_t>(c.nroots), false);
  for (int r = 0; r < c.nroots; ++r) {
    if (seen[static_cast<size_t>(r)]) continue;
    int len = 0, j = r;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = p[static_cast<size_t>(j)];
      ++len;
    } while (j != r);
    cyc.emplace_back(norms[static_cast<size_t>(r)], len);
  }
  std::sort(cyc.begin(), cyc.end());
  std::ostringstream os;
  os << "cyc";
  for (size_t i = 0; i < cyc.size(); ++i) {
    if (i > 0 && cyc[i] == cyc[i - 1]) continue;
    os << ":" << cyc[i].first << "." << cyc[i].second << "x"
       << std::count(cyc.begin(), cyc.end(), cyc[i]);
  }
  // Fold in the library fingerprint (order, characteristic polynomial,
  // signed cycle type on the weight system, divisors of K - I).
  std::vector<int> word = word_of(c, code);
  os << ";" << eforder::class_fingerprint(c.g, eforder::kaction_from_word(c.g, word));
  return os.str();
}

std::vector<int> word_of(const Ctx& c, Code code) {
  // Peel right descents: column i of the matrix is w(alpha_i).
  std::vector<int> rev;
  Code cur = code;
  const Code id = code_of_identity(c);
  while (cur != id) {
    int descent = -1;
    for (int i = 0; i < c.l && descent < 0; ++i) {
      int r = static_cast<int>((cur >> (8 * i)) & 0xFF);
      if (r >= c.npos) descent = i;  // negative root
    }
    if (descent < 0) throw std::runtime_error("word_of: no descent");
    // cur = cur * s_descent
    Mat8 m = mat_from_code(c, cur);
    std::uint16_t img[8];
    for (int i = 0; i < c.l; ++i)
      img[i] = static_cast<std::uint16_t>(
          apply_mat(c, m, c.pre[static_cast<size_t>(descent)][static_cast<size_t>(i)]));
    cur = pack_images(c, img);
    rev.push_back(descent + 1);
    if (rev.size() > 2000) throw std::runtime_error("word_of: runaway");
  }
  return {rev.rbegin(), rev.rend()};
}

struct FoundClass {
  std::uint64_t size;
  Code rep;
  std::vector<int> word;
};

std::uint64_t sweep_class(const Ctx& c, Code seed, std::uint64_t cap, bool& capped) {
  CodeSet visited(1 << 12);
  std::vector<Code> frontier{seed}, next;
  visited.insert(seed);
  capped = false;
  while (!frontier.empty()) {
    next.clear();
    for (Code code : frontier) {
      Mat8 m = mat_from_code(c, code);
      for (int j = 0; j < c.l; ++j) {
        Code child = conj_by_gen(c, m, j);
        if (visited.insert(child)) next.push_back(child);
      }
    }
    frontier.swap(next);
    if (visited.size() > cap) {
      capped = true;
      return visited.size();
    }
  }
  return visited.size();
}

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

void run_group(GroupType g, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  Ctx ctx = build_ctx(g);
  const std::uint64_t total_order = eforder::weyl_order(g);
  std::cerr << "== " << eforder::name(g) << ": |W| = " << total_order << ", " << ctx.nroots
            << " roots\n";

  std::deque<Code> queue;
  queue.push_back(code_of_identity(ctx));
  {
    // Generators and short products as a deterministic warm start.
    Code id = code_of_identity(ctx);
    std::vector<Code> gens;
    for (int j = 0; j < ctx.l; ++j) {
      Mat8 m = mat_from_code(ctx, id);
      (void)m;
      std::uint16_t img[8];
      for (int i = 0; i < ctx.l; ++i) img[i] = ctx.pre[static_cast<size_t>(j)][static_cast<size_t>(i)];
      // s_j itself: its images of the simple roots.
      gens.push_back(pack_images(ctx, img));
    }
    for (Code a : gens) queue.push_back(a);
    for (Code a : gens)
      for (Code b : gens) queue.push_back(code_mul(ctx, a, b));
  }

  Rng rng(0x5EED5EED5EEDull + static_cast<std::uint64_t>(eforder::rank(g)));
  std::map<std::string, size_t> seen;
  std::vector<FoundClass> classes;
  std::uint64_t total = 0;
  std::uint64_t candidates = 0;
  const std::uint64_t cap = 200000000ull;  // sanity cap per class

  while (total < total_order) {
    Code cand;
    if (!queue.empty()) {
      cand = queue.front();
      queue.pop_front();
    } else {
      // Deterministic random word.
      int len = 2 + static_cast<int>(rng.next() % 60);
      Code acc = code_of_identity(ctx);
      for (int t = 0; t < len; ++t) {
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(ctx.l));
        Mat8 m = mat_from_code(ctx, acc);
        std::uint16_t img[8];
        for (int i = 0; i < ctx.l; ++i)
          img[i] = static_cast<std::uint16_t>(
              apply_mat(ctx, m, ctx.pre[static_cast<size_t>(j)][static_cast<size_t>(i)]));
        acc = pack_images(ctx, img);
      }
      cand = acc;
    }
    ++candidates;
    std::string fp = fingerprint(ctx, cand);
    if (seen.count(fp)) continue;

    bool capped = false;
    std::uint64_t size = sweep_class(ctx, cand, cap, capped);
    if (capped) throw std::runtime_error("class sweep exceeded the size cap");
    seen.emplace(fp, classes.size());
    FoundClass fc;
    fc.size = size;
    fc.rep = cand;
    fc.word = word_of(ctx, cand);
    classes.push_back(fc);
    total += size;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "  class " << classes.size() << ": size " << size << "  (total " << total << "/"
              << total_order << ", " << candidates << " candidates, " << static_cast<long>(secs)
              << "s)\n";

    // Enrich the queue: powers of the new representative, products with
    // everything found so far.
    {
      Code p = cand;
      for (int e = 2; e <= 40; ++e) {
        p = code_mul(ctx, p, cand);
        if (p == code_of_identity(ctx)) break;
        queue.push_back(p);
      }
      for (const FoundClass& other : classes) {
        queue.push_back(code_mul(ctx, cand, other.rep));
        queue.push_back(code_mul(ctx, other.rep, cand));
      }
    }
    if (total > total_order) throw std::runtime_error("class sizes overshoot |W|");
  }

  std::sort(classes.begin(), classes.end(), [](const FoundClass& a, const FoundClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.word < b.word;
  });
  out << "group " << eforder::name(g) << " weyl-order " << total_order << " classes "
      << classes.size() << "\n";
  for (const FoundClass& fc : classes) {
    out << "class " << fc.size << " " << fc.word.size();
    for (int i : fc.word) out << " " << i;
    out << "\n";
  }
  out.flush();
  std::cerr << "== " << eforder::name(g) << ": " << classes.size() << " classes, done\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<GroupType> groups;
  for (int i = 1; i < argc; ++i) {
    auto g = eforder::parse_group(argv[i]);
    if (!g) {
      std::cerr << "unknown group: " << argv[i] << "\n";
      return 1;
    }
    groups.push_back(*g);
  }
  if (groups.empty()) {
    std::cerr << "usage: gen_weyl_classes G2 [F4 E6 E7 E8] > out.txt\n";
    return 1;
  }
  std::cout << "# Weyl group conjugacy classes: representative words in simple reflections.\n";
  std::cout << "# group <name> weyl-order <|W|> classes <count>\n";
  std::cout << "# class <size> <word length> <letters...>   (sorted by size, then word)\n";
  try {
    for (GroupType g : groups) run_group(g, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
