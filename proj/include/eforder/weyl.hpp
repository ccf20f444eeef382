// weyl.hpp -- Weyl group elements as simultaneous actions on k-space
// (unimodular rank x rank matrices) and on the torus weight vectors
// (signed permutations), plus conjugacy-class tables.
//
// Matrix conventions: the k-action K of a word [i1,...,it] is the
// product M(s_{i1}) * ... * M(s_{it}) where M(s_j) is the identity with
// row j decremented by row j of the Cartan matrix.  Acting on column
// vectors, K applies the reflections right-to-left, matching the
// operator product n_{i1} ... n_{it}.  Acting on weight row vectors
// from the right, v_j * K = sign(sigma(j)) * v_{|sigma(j)|}, which is
// exactly the signed permutation of diagonal exponents induced by
// conjugating a torus element.
#pragma once

#include "eforder/rootdata.hpp"

#include <iosfwd>

namespace eforder {

struct SignedPermutation {
  std::vector<int> images;  // images[j-1] in {+-1..+-u}; all positive for E6

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int j) const { return images[static_cast<size_t>(j - 1)]; }
  // Multiset of (cycle length, cycle sign) pairs, sorted.
  std::vector<std::pair<int, int>> signed_cycle_type() const;
};

struct WeylElement {
  GroupType group;
  std::vector<int> word;  // 1-based simple reflection indices
  IntMatrix kaction;
  SignedPermutation sigma;
};

SmallMat simple_reflection_kaction(GroupType g, int i);
SmallMat kaction_from_word(GroupType g, const std::vector<int>& word);
SignedPermutation derive_sigma(const WeightSystem& ws, const SmallMat& kaction);

WeylElement identity_element(GroupType g);
WeylElement simple_reflection(GroupType g, int i);
WeylElement element_from_word(GroupType g, const std::vector<int>& word);
WeylElement compose(const WeylElement& a, const WeylElement& b);

int element_order(const SmallMat& kaction);
// Reduced word recovered by peeling left descents through the root system.
std::vector<int> word_from_kaction(GroupType g, const SmallMat& kaction);

// Class-distinguishing invariant: element order, characteristic
// polynomial of the k-action, signed cycle type of sigma, and the
// elementary divisors of K - I.
std::string class_fingerprint(GroupType g, const SmallMat& kaction);

// Full enumeration, stored as a lexicographically sorted list of
// packed int8 matrices.  Refused for E8; E7 (2,903,040 elements,
// roughly 0.5 GB working set) requires the explicit opt-in.
struct GroupEnumeration {
  GroupType group = GroupType::G2;
  int rank = 0;
  std::vector<std::int8_t> buf;

  size_t size() const { return buf.empty() ? 0 : buf.size() / (static_cast<size_t>(rank) * rank); }
  SmallMat matrix(size_t idx) const;
  // Binary search; npos when absent.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t find(const SmallMat& m) const;
};

GroupEnumeration enumerate_group(GroupType g, bool opt_in_e7 = false);

struct ConjugacyClass {
  Int size;
  WeylElement representative;
};

struct ConjugacyClassTable {
  GroupType group;
  std::vector<ConjugacyClass> classes;
};

enum class ClassTableMode { kEnumerate, kEmbedded };

// Location of the shipped data directory; respects the EFORDER_DATA
// environment variable, falling back to the compiled-in default.
std::string default_data_dir();

ConjugacyClassTable conjugacy_classes(GroupType g, ClassTableMode mode,
                                      const std::string& data_dir = default_data_dir(),
                                      bool opt_in_e7 = false);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural checks on a class table; when `against_enumeration` is
// set (and the group is enumerable) the table is also matched class by
// class against a fresh enumeration.
ValidationReport validate_class_table(const ConjugacyClassTable& t,
                                      bool against_enumeration = false,
                                      bool opt_in_e7 = false);

// Embedded class-data file: one "group" header per group followed by
// one "class <size> <len> <letters...>" line per class, sorted by
// (size, word).  See data/README.md.
std::vector<ConjugacyClassTable> load_class_tables(const std::string& path);
ConjugacyClassTable load_class_table(GroupType g, const std::string& path);
void write_class_tables(std::ostream& os, const std::vector<ConjugacyClassTable>& tables);

}  // namespace eforder
