#include "eforder/weyl.hpp"

#include "eforder/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace eforder {

namespace {

std::vector<int> weight_key(const IntRowVec& v) {
  std::vector<int> k(static_cast<size_t>(v.cols()));
  for (Eigen::Index i = 0; i < v.cols(); ++i) k[static_cast<size_t>(i)] = static_cast<int>(v(i).get_si());
  return k;
}

// weight coords -> 1-based index; negated coords -> negative index.
const std::map<std::vector<int>, int>& weight_index(GroupType g) {
  static std::map<GroupType, std::map<std::vector<int>, int>> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    const WeightSystem& ws = weight_system(g);
    std::map<std::vector<int>, int> m;
    for (int j = 1; j <= ws.u; ++j) {
      m[weight_key(ws.vec(j))] = j;
      if (ws.paired) m[weight_key(IntRowVec(-ws.vec(j)))] = -j;
    }
    it = cache.emplace(g, std::move(m)).first;
  }
  return it->second;
}

std::vector<std::int8_t> pack(const SmallMat& m) {
  std::vector<std::int8_t> key(static_cast<size_t>(m.rows() * m.cols()));
  size_t p = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) < -127 || m(i, j) > 127)
        throw DataIntegrityError("weyl: matrix entry out of int8 range");
      key[p++] = static_cast<std::int8_t>(m(i, j));
    }
  return key;
}

void charpoly_key(const SmallMat& k, std::ostringstream& os) {
  // Faddeev-LeVerrier; divisions are exact.
  const Eigen::Index n = k.rows();
  IntMatrix a = to_int_matrix(k);
  IntMatrix m = identity_matrix(n);
  os << "cp";
  Int c;
  for (Eigen::Index step = 1; step <= n; ++step) {
    m = (a * m);
    Int tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += m(i, i);
    Int num = -tr;
    mpz_divexact_ui(c.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(step));
    os << ":" << c.get_str();
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c;
  }
}

}  // namespace

std::vector<std::pair<int, int>> SignedPermutation::signed_cycle_type() const {
  const int u = size();
  std::vector<bool> seen(static_cast<size_t>(u + 1), false);
  std::vector<std::pair<int, int>> cycles;
  for (int start = 1; start <= u; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0, sign = 1, j = start;
    do {
      seen[static_cast<size_t>(j)] = true;
      int img = images[static_cast<size_t>(j - 1)];
      if (img < 0) sign = -sign;
      j = std::abs(img);
      ++len;
    } while (j != start);
    cycles.emplace_back(len, sign);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

SmallMat simple_reflection_kaction(GroupType g, int i) {
  const int l = rank(g);
  if (i < 1 || i > l) throw std::invalid_argument("simple_reflection: index out of range");
  SmallMat c = to_small_matrix(cartan_matrix(g));
  SmallMat m = SmallMat::Identity(l, l);
  m.row(i - 1) -= c.row(i - 1);
  return m;
}

SmallMat kaction_from_word(GroupType g, const std::vector<int>& word) {
  const int l = rank(g);
  SmallMat k = SmallMat::Identity(l, l);
  for (int i : word) k = k * simple_reflection_kaction(g, i);
  return k;
}

SignedPermutation derive_sigma(const WeightSystem& ws, const SmallMat& kaction) {
  const auto& index = weight_index(ws.group);
  SignedPermutation sigma;
  sigma.images.resize(static_cast<size_t>(ws.u));
  std::vector<bool> hit(static_cast<size_t>(ws.u + 1), false);
  for (int j = 1; j <= ws.u; ++j) {
    const IntRowVec& v = ws.vec(j);
    std::vector<int> img(static_cast<size_t>(v.cols()));
    for (Eigen::Index t = 0; t < v.cols(); ++t) {
      long acc = 0;
      for (Eigen::Index s = 0; s < v.cols(); ++s)
        acc += v(s).get_si() * kaction(static_cast<Eigen::Index>(s), t);
      img[static_cast<size_t>(t)] = static_cast<int>(acc);
    }
    auto it = index.find(img);
    if (it == index.end())
      throw DataIntegrityError("derive_sigma: image is not a weight vector");
    sigma.images[static_cast<size_t>(j - 1)] = it->second;
    if (hit[static_cast<size_t>(std::abs(it->second))])
      throw DataIntegrityError("derive_sigma: not a permutation");
    hit[static_cast<size_t>(std::abs(it->second))] = true;
  }
  return sigma;
}

WeylElement identity_element(GroupType g) { return element_from_word(g, {}); }

WeylElement simple_reflection(GroupType g, int i) { return element_from_word(g, {i}); }

WeylElement element_from_word(GroupType g, const std::vector<int>& word) {
  WeylElement w;
  w.group = g;
  w.word = word;
  SmallMat k = kaction_from_word(g, word);
  w.kaction = to_int_matrix(k);
  w.sigma = derive_sigma(weight_system(g), k);
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.group != b.group) throw std::invalid_argument("compose: group mismatch");
  WeylElement w;
  w.group = a.group;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  w.kaction = a.kaction * b.kaction;
  w.sigma = derive_sigma(weight_system(a.group), to_small_matrix(w.kaction));
  return w;
}

int element_order(const SmallMat& kaction) {
  const SmallMat id = SmallMat::Identity(kaction.rows(), kaction.cols());
  SmallMat p = kaction;
  int order = 1;
  while (p != id) {
    p = p * kaction;
    ++order;
    if (order > 1000) throw DataIntegrityError("element_order: runaway order");
  }
  return order;
}

std::vector<int> word_from_kaction(GroupType g, const SmallMat& kaction) {
  const RootSystem& rs = root_system(g);
  const int l = rank(g);
  const SmallMat cart = to_small_matrix(cartan_matrix(g));
  SmallMat k = kaction;
  const SmallMat id = SmallMat::Identity(l, l);
  std::vector<int> word;
  while (k != id) {
    int descent = -1;
    for (int i = 0; i < l && descent < 0; ++i) {
      // Row action of K sends roots to roots; test the image of alpha_i,
      // whose weight coordinates are row i of the Cartan matrix.
      SmallRowVec img = cart.row(i) * k;
      int idx = rs.index_of_weight(img);
      if (idx < 0) throw DataIntegrityError("word_from_kaction: not a Weyl matrix");
      if (rs.is_negative(idx)) descent = i + 1;
    }
    if (descent < 0) throw DataIntegrityError("word_from_kaction: no descent found");
    word.push_back(descent);
    k = simple_reflection_kaction(g, descent) * k;
    if (word.size() > 1000) throw DataIntegrityError("word_from_kaction: runaway word");
  }
  return word;
}

std::string class_fingerprint(GroupType g, const SmallMat& kaction) {
  std::ostringstream os;
  os << "ord" << element_order(kaction) << ";";
  charpoly_key(kaction, os);
  os << ";sct";
  for (auto [len, sign] : derive_sigma(weight_system(g), kaction).signed_cycle_type())
    os << ":" << len << (sign > 0 ? "+" : "-");
  os << ";kmi";
  IntMatrix kmi = to_int_matrix(kaction) - identity_matrix(kaction.rows());
  for (const Int& d : elementary_divisors(kmi)) os << ":" << d.get_str();
  return os.str();
}

SmallMat GroupEnumeration::matrix(size_t idx) const {
  SmallMat m(rank, rank);
  const std::int8_t* p = buf.data() + idx * static_cast<size_t>(rank) * rank;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m(i, j) = *p++;
  return m;
}

size_t GroupEnumeration::find(const SmallMat& m) const {
  const size_t stride = static_cast<size_t>(rank) * rank;
  std::vector<std::int8_t> key = pack(m);
  size_t lo = 0, hi = size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    int cmp = std::memcmp(buf.data() + mid * stride, key.data(), stride);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::memcmp(buf.data() + lo * stride, key.data(), stride) == 0) return lo;
  return npos;
}

GroupEnumeration enumerate_group(GroupType g, bool opt_in_e7) {
  if (g == GroupType::E8)
    throw std::invalid_argument(
        "enumerate_group: E8 enumeration refused (696,729,600 elements exceed any "
        "reasonable in-memory budget); use the embedded class table instead");
  if (g == GroupType::E7 && !opt_in_e7)
    throw std::invalid_argument(
        "enumerate_group: E7 enumeration (2,903,040 elements, roughly 0.5 GB) requires the "
        "explicit opt-in flag");

  const int l = rank(g);
  const size_t stride = static_cast<size_t>(l) * l;
  std::vector<SmallMat> gens;
  for (int i = 1; i <= l; ++i) gens.push_back(simple_reflection_kaction(g, i));

  GroupEnumeration out;
  out.group = g;
  out.rank = l;

  auto cmp_at = [&](const std::vector<std::int8_t>& v, size_t a, const std::vector<std::int8_t>& w,
                    size_t b) { return std::memcmp(v.data() + a * stride, w.data() + b * stride, stride); };

  std::vector<std::int8_t> frontier = pack(SmallMat::Identity(l, l));
  out.buf = frontier;
  while (!frontier.empty()) {
    const size_t fn = frontier.size() / stride;
    std::vector<std::int8_t> cand;
    cand.reserve(frontier.size() * gens.size());
    SmallMat m(l, l);
    for (size_t e = 0; e < fn; ++e) {
      const std::int8_t* p = frontier.data() + e * stride;
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = p[i * l + j];
      for (const SmallMat& gmat : gens) {
        SmallMat prod = m * gmat;
        std::vector<std::int8_t> key = pack(prod);
        cand.insert(cand.end(), key.begin(), key.end());
      }
    }
    // Sort candidate keys, drop duplicates and already-known elements,
    // then merge into the sorted master list.
    const size_t cn = cand.size() / stride;
    std::vector<size_t> order(cn);
    for (size_t i = 0; i < cn; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return cmp_at(cand, a, cand, b) < 0; });
    std::vector<std::int8_t> fresh;
    for (size_t oi = 0; oi < cn; ++oi) {
      size_t i = order[oi];
      if (oi > 0 && cmp_at(cand, i, cand, order[oi - 1]) == 0) continue;
      // Binary search in the master list.
      size_t lo = 0, hi = out.buf.size() / stride;
      bool found = false;
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        int c = std::memcmp(out.buf.data() + mid * stride, cand.data() + i * stride, stride);
        if (c == 0) {
          found = true;
          break;
        }
        if (c < 0)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (!found) fresh.insert(fresh.end(), cand.begin() + static_cast<std::ptrdiff_t>(i * stride),
                               cand.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride));
    }
    // Merge sorted master and sorted fresh block.
    if (!fresh.empty()) {
      std::vector<std::int8_t> merged(out.buf.size() + fresh.size());
      const size_t an = out.buf.size() / stride, bn = fresh.size() / stride;
      size_t a = 0, b = 0, w = 0;
      while (a < an || b < bn) {
        int c;
        if (a == an)
          c = 1;
        else if (b == bn)
          c = -1;
        else
          c = cmp_at(out.buf, a, fresh, b);
        const std::vector<std::int8_t>& src = (c <= 0) ? out.buf : fresh;
        size_t& idx = (c <= 0) ? a : b;
        std::memcpy(merged.data() + w * stride, src.data() + idx * stride, stride);
        ++idx;
        ++w;
      }
      merged.resize(w * stride);
      out.buf.swap(merged);
    }
    frontier.swap(fresh);
  }

  if (out.size() != weyl_order(g))
    throw DataIntegrityError("enumerate_group: closure size does not match the Weyl order");
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("EFORDER_DATA")) return env;
#ifdef EFORDER_DATA_DIR
  return EFORDER_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

ConjugacyClassTable classes_by_enumeration(GroupType g, bool opt_in_e7) {
  GroupEnumeration en = enumerate_group(g, opt_in_e7);
  const int l = rank(g);
  std::vector<SmallMat> gens;
  for (int i = 1; i <= l; ++i) gens.push_back(simple_reflection_kaction(g, i));

  const size_t n = en.size();
  std::vector<bool> visited(n, false);
  struct RawClass {
    size_t size;
    size_t rep;
  };
  std::vector<RawClass> raw;
  std::vector<size_t> stack;
  for (size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    stack.assign(1, start);
    size_t count = 0;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      ++count;
      SmallMat m = en.matrix(cur);
      for (const SmallMat& gmat : gens) {
        SmallMat conj = gmat * m * gmat;  // generators are involutions
        size_t idx = en.find(conj);
        if (idx == GroupEnumeration::npos)
          throw DataIntegrityError("conjugacy_classes: conjugate escaped the enumeration");
        if (!visited[idx]) {
          visited[idx] = true;
          stack.push_back(idx);
        }
      }
    }
    raw.push_back({count, start});
  }

  ConjugacyClassTable table;
  table.group = g;
  for (const RawClass& c : raw) {
    ConjugacyClass cc;
    cc.size = static_cast<unsigned long>(c.size);
    cc.representative = element_from_word(g, word_from_kaction(g, en.matrix(c.rep)));
    table.classes.push_back(std::move(cc));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              if (a.size != b.size) return a.size < b.size;
              return a.representative.word < b.representative.word;
            });
  return table;
}

}  // namespace

ConjugacyClassTable conjugacy_classes(GroupType g, ClassTableMode mode,
                                      const std::string& data_dir, bool opt_in_e7) {
  if (mode == ClassTableMode::kEnumerate) return classes_by_enumeration(g, opt_in_e7);
  return load_class_table(g, data_dir + "/weyl_conjugacy_classes.txt");
}

ValidationReport validate_class_table(const ConjugacyClassTable& t, bool against_enumeration,
                                      bool opt_in_e7) {
  ValidationReport rep;
  const GroupType g = t.group;
  const Int order = static_cast<unsigned long>(weyl_order(g));

  if (static_cast<int>(t.classes.size()) != expected_class_count(g)) {
    std::ostringstream os;
    os << name(g) << ": expected " << expected_class_count(g) << " classes, found "
       << t.classes.size();
    rep.violations.push_back(os.str());
  }
  Int total = 0;
  for (const ConjugacyClass& c : t.classes) {
    total += c.size;
    if (c.size <= 0 || order % c.size != 0) {
      rep.violations.push_back(std::string(name(g)) + ": class size " + c.size.get_str() +
                               " does not divide the Weyl order");
    }
  }
  if (total != order)
    rep.violations.push_back(std::string(name(g)) + ": sizes do not sum to |W| (" +
                             total.get_str() + " vs " + order.get_str() + ")");

  std::map<std::string, int> prints;
  for (size_t i = 0; i < t.classes.size(); ++i) {
    const WeylElement& w = t.classes[i].representative;
    SmallMat k = to_small_matrix(w.kaction);
    Int det = determinant(w.kaction);
    if (det != 1 && det != -1)
      rep.violations.push_back(std::string(name(g)) + ": representative " + std::to_string(i) +
                               " is not unimodular");
    try {
      SmallMat replay = kaction_from_word(g, w.word);
      if (replay != k)
        rep.violations.push_back(std::string(name(g)) + ": word does not replay to kaction at " +
                                 std::to_string(i));
      derive_sigma(weight_system(g), k);  // compatibility invariant
      std::string fp = class_fingerprint(g, k);
      auto [it, fresh] = prints.emplace(fp, static_cast<int>(i));
      if (!fresh) {
        std::ostringstream os;
        os << name(g) << ": representatives " << it->second << " and " << i
           << " share a class fingerprint (possible duplicate class)";
        rep.violations.push_back(os.str());
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(std::string(name(g)) + ": representative " + std::to_string(i) +
                               ": " + e.what());
    }
  }

  const bool enumerable =
      g == GroupType::G2 || g == GroupType::F4 || g == GroupType::E6 ||
      (g == GroupType::E7 && opt_in_e7);
  if (against_enumeration && enumerable) {
    GroupEnumeration en = enumerate_group(g, opt_in_e7);
    // Partition the group and locate every embedded representative.
    ConjugacyClassTable ground = classes_by_enumeration(g, opt_in_e7);
    std::map<std::string, Int> truth;  // fingerprint -> size
    for (const ConjugacyClass& c : ground.classes)
      truth[class_fingerprint(g, to_small_matrix(c.representative.kaction))] = c.size;
    if (ground.classes.size() != t.classes.size())
      rep.violations.push_back(std::string(name(g)) + ": enumerated class count differs");
    for (size_t i = 0; i < t.classes.size(); ++i) {
      const ConjugacyClass& c = t.classes[i];
      std::string fp = class_fingerprint(g, to_small_matrix(c.representative.kaction));
      auto it = truth.find(fp);
      if (it == truth.end())
        rep.violations.push_back(std::string(name(g)) + ": class " + std::to_string(i) +
                                 " not found among enumerated classes");
      else if (it->second != c.size)
        rep.violations.push_back(std::string(name(g)) + ": class " + std::to_string(i) +
                                 " size mismatch against enumeration");
    }
  }
  return rep;
}

std::vector<ConjugacyClassTable> load_class_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataIntegrityError("cannot open class data file: " + path);
  std::vector<ConjugacyClassTable> tables;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "group") {
      std::string gname, kw1, kw2;
      std::uint64_t order = 0;
      int count = 0;
      ls >> gname >> kw1 >> order >> kw2 >> count;
      auto g = parse_group(gname);
      if (!g || kw1 != "weyl-order" || kw2 != "classes")
        throw DataIntegrityError("malformed group header in class data: " + line);
      if (order != weyl_order(*g))
        throw DataIntegrityError("class data: wrong Weyl order for " + gname);
      tables.push_back(ConjugacyClassTable{*g, {}});
    } else if (tag == "class") {
      if (tables.empty()) throw DataIntegrityError("class record before group header");
      long size = 0;
      int len = 0;
      ls >> size >> len;
      std::vector<int> word(static_cast<size_t>(len));
      for (int i = 0; i < len; ++i) ls >> word[static_cast<size_t>(i)];
      if (!ls) throw DataIntegrityError("malformed class record: " + line);
      ConjugacyClass c;
      c.size = size;
      c.representative = element_from_word(tables.back().group, word);
      tables.back().classes.push_back(std::move(c));
    } else {
      throw DataIntegrityError("unknown record in class data: " + line);
    }
  }
  return tables;
}

ConjugacyClassTable load_class_table(GroupType g, const std::string& path) {
  for (auto& t : load_class_tables(path))
    if (t.group == g) return t;
  throw DataIntegrityError(std::string("class data file has no record for ") + name(g));
}

void write_class_tables(std::ostream& os, const std::vector<ConjugacyClassTable>& tables) {
  os << "# Weyl group conjugacy classes: representative words in simple reflections.\n";
  os << "# group <name> weyl-order <|W|> classes <count>\n";
  os << "# class <size> <word length> <letters...>   (sorted by size, then word)\n";
  for (const auto& t : tables) {
    os << "group " << name(t.group) << " weyl-order " << weyl_order(t.group) << " classes "
       << t.classes.size() << "\n";
    for (const auto& c : t.classes) {
      os << "class " << c.size.get_str() << " " << c.representative.word.size();
      for (int i : c.representative.word) os << " " << i;
      os << "\n";
    }
  }
}

}  // namespace eforder
