#include <gtest/gtest.h>

#include <algorithm>

#include "klcells/chartable.hpp"

using namespace klc;
using namespace klc::chars;

namespace {
cox::CoxeterGroup make(const std::string& l) { return cox::CoxeterGroup(cox::CoxeterSystem::from_label(l), 2000); }
std::vector<long long> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}
}  // namespace

TEST(CharTable, Examples) {
  auto a2 = make("A2");
  EXPECT_EQ(sorted_degrees(ordinary_character_table(a2)), (std::vector<long long>{1, 1, 2}));
  auto b2 = make("B2");
  EXPECT_EQ(sorted_degrees(ordinary_character_table(b2)), (std::vector<long long>{1, 1, 1, 1, 2}));
  auto h3 = make("H3");
  auto t = ordinary_character_table(h3);
  EXPECT_EQ(t.size(), 10);
  long long s = 0;
  for (auto d : t.degrees) s += d * d;
  EXPECT_EQ(s, 120);
  // H3 has characters with values outside Q
  bool irrational = false;
  for (auto& row : t.values)
    for (auto& v : row) irrational = irrational || !v.is_rational();
  EXPECT_TRUE(irrational);
}

TEST(CharTable, OrthogonalityAndInvariants) {
  for (std::string l : {"A3", "A4", "B3", "B4", "D4", "H3", "F4", "I2(5)", "I2(8)", "I2(12)", "B2xA1", "A1xA1"}) {
    auto g = make(l);
    auto t = ordinary_character_table(g);
    EXPECT_EQ(t.size(), static_cast<int>(g.classes().size())) << l;
    long long s = 0;
    for (auto d : t.degrees) s += d * d;
    EXPECT_EQ(s, g.size()) << l;
    // column orthogonality: sum_chi chi(g) chi(h) = delta |C_W(g)|
    for (size_t a = 0; a < t.class_sizes.size(); ++a)
      for (size_t b = 0; b < t.class_sizes.size(); ++b) {
        num::AlgebraicNumber c;
        for (auto& row : t.values) c += row[a] * row[b];
        EXPECT_EQ(c, num::AlgebraicNumber(a == b ? g.size() / t.class_sizes[a] : 0)) << l;
      }
    ASSERT_GE(t.trivial, 0);
    ASSERT_GE(t.sign, 0);
    EXPECT_EQ(t.b_values[t.trivial], 0);
    EXPECT_EQ(t.b_values[t.sign], g.num_positive_roots());
    if (g.system().components().size() == 1) {
      ASSERT_GE(t.reflection, 0) << l;
      EXPECT_EQ(t.b_values[t.reflection], 1);
    }
    for (int i = 0; i < t.size(); ++i) EXPECT_EQ(t.value(i, 0), num::AlgebraicNumber(t.degrees[i]));
  }
}

TEST(CharTable, KnownClassCounts) {
  EXPECT_EQ(ordinary_character_table(make("F4")).size(), 25);
  EXPECT_EQ(ordinary_character_table(make("D4")).size(), 13);
  EXPECT_EQ(ordinary_character_table(make("B4")).size(), 20);
  EXPECT_EQ(ordinary_character_table(make("A5")).size(), 11);
}

TEST(CharTable, MolienSymmetricGroupSign) {
  for (int n = 2; n <= 5; ++n) {
    auto g = make("A" + std::to_string(n - 1));
    auto t = ordinary_character_table(g);
    EXPECT_EQ(t.b_values[t.sign], n * (n - 1) / 2);
  }
}

TEST(CharTable, InductionFrobenius) {
  auto g = make("B3");
  auto t = ordinary_character_table(g);
  auto p = g.parabolic(0b110);
  // induced trivial: multiplicity of chi = <Res chi, 1>
  std::vector<num::AlgebraicNumber> one(p.elements.size(), num::AlgebraicNumber(1));
  auto ind = induce(t, p.elements, one);
  EXPECT_EQ(ind[0], num::AlgebraicNumber(g.size() / static_cast<long long>(p.elements.size())));
  auto m = t.multiplicities(ind);
  for (int i = 0; i < t.size(); ++i) {
    num::AlgebraicNumber res;
    for (Elt h : p.elements) res += t.value(i, h);
    res = res * num::AlgebraicNumber(num::Rational(1, static_cast<long>(p.elements.size())));
    EXPECT_EQ(res, num::AlgebraicNumber(m[i]));
  }
}
