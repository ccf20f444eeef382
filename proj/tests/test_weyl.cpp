#include "doctest.h"

#include "eforder/weyl.hpp"

#include <random>
#include <set>

using namespace eforder;

TEST_SUITE_BEGIN("weyl");

TEST_CASE("simple reflections are involutions with order-6 G2 rotation") {
  for (int i = 1; i <= 2; ++i) {
    WeylElement s = simple_reflection(GroupType::G2, i);
    CHECK(element_order(to_small_matrix(s.kaction)) == 2);
    SignedPermutation sig = s.sigma;
    for (int j = 1; j <= 3; ++j) {
      int img = sig(j);
      int back = sig(std::abs(img));
      CHECK(std::abs(back) == j);  // sigma has order dividing 2
    }
  }
  WeylElement rot = element_from_word(GroupType::G2, {2, 1});
  CHECK(element_order(to_small_matrix(rot.kaction)) == 6);
}

TEST_CASE("compatibility invariant holds across random words") {
  std::mt19937 rng(31337);
  for (GroupType g : {GroupType::G2, GroupType::F4, GroupType::E6, GroupType::E7, GroupType::E8}) {
    const WeightSystem& ws = weight_system(g);
    std::uniform_int_distribution<int> gd(1, rank(g));
    for (int it = 0; it < 20; ++it) {
      std::vector<int> word;
      for (int t = 0; t < 12; ++t) word.push_back(gd(rng));
      WeylElement w = element_from_word(g, word);
      // v_j * K == sign(sigma(j)) * v_{|sigma(j)|}
      for (int j = 1; j <= ws.u; ++j) {
        IntRowVec img = ws.vec(j) * w.kaction;
        int s = w.sigma(j);
        IntRowVec expect = ws.vec(std::abs(s));
        if (s < 0) expect = -expect;
        CHECK(eq(img, expect));
      }
      CHECK(abs(determinant(w.kaction)) == 1);
    }
  }
}

TEST_CASE("compose concatenates words and matches matrix product") {
  WeylElement a = element_from_word(GroupType::F4, {1, 3});
  WeylElement b = element_from_word(GroupType::F4, {2, 4, 2});
  WeylElement ab = compose(a, b);
  CHECK(ab.word == std::vector<int>{1, 3, 2, 4, 2});
  CHECK(eq(ab.kaction, IntMatrix(a.kaction * b.kaction)));
  // a composed with its reversed word gives the identity.
  WeylElement inv = element_from_word(GroupType::F4, {3, 1});
  WeylElement id = compose(a, inv);
  CHECK(eq(id.kaction, identity_matrix(4)));
}

TEST_CASE("compose is associative on random triples") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gd(1, 4);
  for (int it = 0; it < 10; ++it) {
    auto rand_word = [&] {
      std::vector<int> w;
      for (int t = 0; t < 5; ++t) w.push_back(gd(rng));
      return w;
    };
    WeylElement a = element_from_word(GroupType::F4, rand_word());
    WeylElement b = element_from_word(GroupType::F4, rand_word());
    WeylElement c = element_from_word(GroupType::F4, rand_word());
    CHECK(eq(compose(compose(a, b), c).kaction, compose(a, compose(b, c)).kaction));
  }
}

TEST_CASE("the G2 Coxeter cube is minus one on the weights") {
  WeylElement w = element_from_word(GroupType::G2, {2, 1, 2, 1, 2, 1});
  for (int j = 1; j <= 3; ++j) CHECK(w.sigma(j) == -j);
}

TEST_CASE("word_from_kaction round trip") {
  std::mt19937 rng(11);
  for (GroupType g : {GroupType::G2, GroupType::F4, GroupType::E8}) {
    std::uniform_int_distribution<int> gd(1, rank(g));
    for (int it = 0; it < 10; ++it) {
      std::vector<int> word;
      for (int t = 0; t < 14; ++t) word.push_back(gd(rng));
      SmallMat k = kaction_from_word(g, word);
      std::vector<int> reduced = word_from_kaction(g, k);
      CHECK(kaction_from_word(g, reduced) == k);
      CHECK(reduced.size() <= word.size());
    }
  }
}

TEST_CASE("group enumeration sizes") {
  CHECK(enumerate_group(GroupType::G2).size() == 12);
  CHECK(enumerate_group(GroupType::F4).size() == 1152);
  CHECK_THROWS_AS((void)enumerate_group(GroupType::E8), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_group(GroupType::E7), std::invalid_argument);
}

TEST_CASE("E6 enumeration reaches 51840 elements") {
  CHECK(enumerate_group(GroupType::E6).size() == 51840);
}

TEST_CASE("G2 classes match the published table") {
  ConjugacyClassTable t = conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate);
  REQUIRE(t.classes.size() == 6);
  std::multiset<long> sizes, orders;
  for (const auto& c : t.classes) {
    sizes.insert(c.size.get_si());
    orders.insert(element_order(to_small_matrix(c.representative.kaction)));
  }
  CHECK(sizes == std::multiset<long>{1, 1, 2, 2, 3, 3});
  CHECK(orders == std::multiset<long>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("F4 classes: 25 classes summing to 1152") {
  ConjugacyClassTable t = conjugacy_classes(GroupType::F4, ClassTableMode::kEnumerate);
  CHECK(t.classes.size() == 25);
  Int total = 0;
  for (const auto& c : t.classes) total += c.size;
  CHECK(total == 1152);
  ValidationReport rep = validate_class_table(t, /*against_enumeration=*/true);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.ok());
}

TEST_CASE("validator flags corrupted tables") {
  ConjugacyClassTable t = conjugacy_classes(GroupType::G2, ClassTableMode::kEnumerate);
  CHECK(validate_class_table(t).ok());
  ConjugacyClassTable bad = t;
  bad.classes[2].size += 1;
  ValidationReport rep = validate_class_table(bad);
  CHECK_FALSE(rep.ok());
  bool mentions_sum = false;
  for (const auto& v : rep.violations)
    if (v.find("sum") != std::string::npos) mentions_sum = true;
  CHECK(mentions_sum);

  ConjugacyClassTable dup = t;
  dup.classes[1].representative = dup.classes[0].representative;
  dup.classes[1].size = dup.classes[0].size;
  ValidationReport rep2 = validate_class_table(dup);
  CHECK_FALSE(rep2.ok());
}

TEST_SUITE_END();
