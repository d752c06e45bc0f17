#include <gtest/gtest.h>

#include <set>

#include "klcells/coxeter.hpp"

using namespace klc::cox;

namespace {

CoxeterGroup make(const std::string& label, long long budget = 2000) {
  return CoxeterGroup(CoxeterSystem::from_label(label), budget);
}

// Bruhat order as the transitive closure of x -> tx (t a reflection, l(tx) > l(x)).
std::vector<std::vector<char>> reflection_closure(const CoxeterGroup& g) {
  int n = g.size();
  std::set<Elt> refl;
  for (Elt w = 0; w < n; ++w)
    for (int s = 0; s < g.rank(); ++s) refl.insert(g.multiply(g.multiply(w, g.generator(s)), g.inverse(w)));
  std::vector<std::vector<char>> up(n, std::vector<char>(n, 0));
  std::vector<Elt> order(n);
  for (Elt w = 0; w < n; ++w) order[w] = w;
  std::sort(order.begin(), order.end(), [&](Elt a, Elt b) { return g.length(a) > g.length(b); });
  for (Elt x : order) {
    up[x][x] = 1;
    for (Elt t : refl) {
      Elt y = g.multiply(t, x);
      if (g.length(y) > g.length(x))
        for (Elt z = 0; z < n; ++z)
          if (up[y][z]) up[x][z] = 1;
    }
  }
  return up;
}

// x <= w iff x is a subword product of a reduced word of w
std::vector<char> subword_products(const CoxeterGroup& g, Elt w) {
  std::vector<char> in(g.size(), 0);
  in[0] = 1;
  auto word = g.reduced_word(w);
  for (int s : word) {
    auto next = in;
    for (Elt x = 0; x < g.size(); ++x)
      if (in[x]) next[g.rmul(x, s)] = 1;
    in = next;
  }
  return in;
}

}  // namespace

TEST(Coxeter, BuildExamples) {
  auto a2 = make("A2");
  EXPECT_EQ(a2.size(), 6);
  EXPECT_EQ(a2.max_length(), 3);
  auto b2 = make("B2");
  EXPECT_EQ(b2.size(), 8);
  EXPECT_EQ(b2.max_length(), 4);
  auto h3 = make("H3");
  EXPECT_EQ(h3.size(), 120);
  EXPECT_EQ(h3.max_length(), 15);
}

TEST(Coxeter, OrdersMatchTypeTable) {
  for (std::string l : {"A1", "A3", "A5", "B3", "B4", "D4", "D5", "F4", "G2", "H3", "I2(5)", "I2(12)", "B2xA1", "A1xA1xA2"}) {
    auto g = make(l, 2000);
    EXPECT_EQ(g.size(), g.system().expected_order()) << l;
    EXPECT_EQ(g.max_length(), g.num_positive_roots()) << l;
  }
}

TEST(Coxeter, BudgetAndFiniteness) {
  EXPECT_THROW(make("E6", 2000), BudgetExceeded);
  EXPECT_THROW(CoxeterSystem::from_label("Q3"), std::invalid_argument);
  // affine A2: all labels 3 on a triangle
  auto aff = CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  EXPECT_THROW(CoxeterGroup(aff, 2000), std::invalid_argument);
  EXPECT_EQ(make("A6", 6000).size(), 5040);
}

TEST(Coxeter, LengthProperties) {
  for (std::string l : {"A3", "B3", "D4", "H3", "I2(7)", "B2xA1"}) {
    auto g = make(l);
    Elt w0 = g.longest();
    std::set<Elt> conj_s;
    for (Elt w = 0; w < g.size(); ++w) {
      int inv = 0;
      for (int r = 0; r < g.num_positive_roots(); ++r)
        if (!g.is_positive_root(g.act_on_root(w, r))) ++inv;
      EXPECT_EQ(inv, g.length(w));
      EXPECT_EQ(g.length(w), g.length(g.inverse(w)));
      EXPECT_EQ(g.multiply(w, g.inverse(w)), 0);
      EXPECT_EQ(g.length(g.multiply(w, w0)), g.max_length() - g.length(w));
      for (int s = 0; s < g.rank(); ++s) {
        EXPECT_EQ(std::abs(g.length(g.lmul(s, w)) - g.length(w)), 1);
        bool ld = g.length(g.lmul(s, w)) < g.length(w), rd = g.length(g.rmul(w, s)) < g.length(w);
        EXPECT_EQ(ld, bool(g.left_descents(w) >> s & 1));
        EXPECT_EQ(rd, bool(g.right_descents(w) >> s & 1));
        if (g.inverse(w) == w) EXPECT_EQ(ld, rd);
      }
    }
    for (int s = 0; s < g.rank(); ++s) {
      Elt c = g.multiply(g.multiply(w0, g.generator(s)), w0);
      EXPECT_EQ(g.length(c), 1);
      conj_s.insert(c);
    }
    EXPECT_EQ(static_cast<int>(conj_s.size()), g.rank());
  }
}

TEST(Coxeter, BruhatExamples) {
  auto b2 = make("B2");
  Elt t = b2.generator(0), s = b2.generator(1);
  EXPECT_TRUE(b2.bruhat_leq(0, b2.longest()));
  EXPECT_TRUE(b2.bruhat_leq(t, t));
  // t is the middle letter of s t s
  EXPECT_TRUE(b2.bruhat_leq(t, b2.from_word({1, 0, 1})));
  EXPECT_FALSE(b2.bruhat_leq(b2.from_word({1, 0, 1}), t));
  EXPECT_FALSE(b2.bruhat_leq(b2.from_word({1, 0}), b2.from_word({0, 1})));
  EXPECT_TRUE(b2.bruhat_leq(t, b2.from_word({0, 1, 0})));
  (void)s;
}

TEST(Coxeter, BruhatImplementationsAgree) {
  for (std::string l : {"A3", "B3", "H3", "I2(6)", "A2xA1"}) {
    auto g = make(l);
    auto up = reflection_closure(g);
    for (Elt w = 0; w < g.size(); ++w) {
      auto sub = subword_products(g, w);
      for (Elt x = 0; x < g.size(); ++x) {
        EXPECT_EQ(bool(up[x][w]), g.bruhat_leq(x, w)) << l;
        EXPECT_EQ(bool(sub[x]), g.bruhat_leq(x, w)) << l;
      }
    }
  }
  // lifting-based fallback (no table) against the table
  auto big = make("A6", 6000);
  EXPECT_FALSE(big.has_bruhat_table());
  auto small = make("D4");
  auto up = reflection_closure(small);
  for (Elt w = 0; w < small.size(); w += 7)
    for (Elt x = 0; x < small.size(); ++x) EXPECT_EQ(bool(up[x][w]), small.bruhat_leq(x, w));
}

TEST(Coxeter, ConjugacyClasses) {
  auto a2 = make("A2");
  std::multiset<size_t> sizes;
  for (auto& c : a2.classes()) sizes.insert(c.members.size());
  EXPECT_EQ(sizes, (std::multiset<size_t>{1, 2, 3}));
  auto a3 = make("A3");
  std::multiset<size_t> inv;
  for (auto& c : a3.classes())
    if (c.is_involution_class) inv.insert(c.members.size());
  EXPECT_EQ(inv, (std::multiset<size_t>{1, 3, 6}));
  auto b2 = make("B2");
  EXPECT_EQ(b2.classes().size(), 5u);
  int ninv = 0;
  bool w0_class = false;
  for (auto& c : b2.classes()) {
    ninv += c.is_involution_class;
    if (c.members == std::vector<Elt>{b2.longest()}) w0_class = c.is_involution_class;
  }
  EXPECT_EQ(ninv, 4);
  EXPECT_TRUE(w0_class);
  for (std::string l : {"B3", "D4", "H3", "F4", "I2(8)"}) {
    auto g = make(l);
    size_t total = 0, invs = 0;
    for (auto& c : g.classes()) {
      total += c.members.size();
      if (c.is_involution_class) {
        invs += c.members.size();
        for (Elt w : c.members) EXPECT_TRUE(g.is_involution(w));
        // minimal-length reps are longest elements of a parabolic in which they are central
        EXPECT_TRUE(g.central_parabolic_of(c.min_length_rep).has_value()) << l;
      }
      for (Elt w : c.members)
        for (int s = 0; s < g.rank(); ++s)
          EXPECT_EQ(g.class_of(g.rmul(g.lmul(s, w), s)), g.class_of(w));
    }
    EXPECT_EQ(total, static_cast<size_t>(g.size()));
    EXPECT_EQ(invs, g.involutions().size());
  }
}

TEST(Coxeter, CentralizerAndEpsilon) {
  auto b2 = make("B2");
  EXPECT_EQ(b2.centralizer(0).size(), 8u);
  EXPECT_EQ(b2.centralizer(b2.longest()).size(), 8u);
  auto a2 = make("A2");
  EXPECT_EQ(a2.centralizer(a2.generator(0)), (std::vector<Elt>{0, a2.generator(0)}));
  Elt s1 = a2.generator(0);
  EXPECT_EQ(a2.epsilon_sigma(s1, 1, 0), 1);
  EXPECT_EQ(a2.epsilon_sigma(s1, 1, s1), -1);
  auto h3 = make("H3");
  // sigma = w0 of W_J negates all of its positive roots
  for (GenMask j = 0; j < 8; ++j) {
    auto sig = h3.central_parabolic_of(h3.parabolic(j).longest);
    if (!sig) continue;
    Elt sigma = h3.parabolic(j).longest;
    int npos = 0;
    for (int r = 0; r < h3.num_positive_roots(); ++r)
      if ((h3.root_support(r) & ~j) == 0) ++npos;
    EXPECT_EQ(h3.epsilon_sigma(sigma, j, sigma), npos % 2 ? -1 : 1);
  }
  EXPECT_THROW(a2.epsilon_sigma(a2.generator(1), 1, 0), std::invalid_argument);
}

TEST(Coxeter, ClassicalReps) {
  auto a2 = make("A2");
  auto ra = involution_class_reps_classical(a2, 'A', 3);
  ASSERT_EQ(ra.size(), 2u);
  EXPECT_EQ(ra[0].element, 0);
  EXPECT_EQ(ra[1].element, a2.generator(0));
  auto b2 = make("B2");
  auto rb = involution_class_reps_classical(b2, 'B', 2);
  std::map<std::string, Elt> m;
  for (auto& r : rb) m[r.label] = r.element;
  EXPECT_EQ(m["sigma_{0,0}"], 0);
  EXPECT_EQ(m["sigma_{1,0}"], b2.generator(0));
  EXPECT_EQ(m["sigma_{0,1}"], b2.generator(1));
  EXPECT_EQ(m["sigma_{2,0}"], b2.longest());
  auto d2 = make("D2");
  auto rd = involution_class_reps_classical(d2, 'D', 2);
  std::map<std::string, Elt> md;
  for (auto& r : rd) md[r.label] = r.element;
  EXPECT_EQ(md["sigma_{0,1}"], d2.generator(1));
  EXPECT_EQ(md["theta(sigma_{0,1})"], d2.generator(0));
  EXPECT_NE(d2.class_of(d2.generator(0)), d2.class_of(d2.generator(1)));
  // every rep is an involution of minimal length in its class; reps hit every involution class once
  for (auto [label, n, type] : std::vector<std::tuple<std::string, int, char>>{
           {"A4", 5, 'A'}, {"A5", 6, 'A'}, {"B3", 3, 'B'}, {"B4", 4, 'B'}, {"D4", 4, 'D'}}) {
    auto g = make(label);
    auto reps = involution_class_reps_classical(g, type, n);
    std::set<int> cls;
    for (auto& r : reps) {
      EXPECT_TRUE(g.is_involution(r.element));
      int c = g.class_of(r.element);
      cls.insert(c);
      EXPECT_EQ(g.length(r.element), g.length(g.classes()[c].min_length_rep)) << label << " " << r.label;
    }
    int ninv = 0;
    for (auto& c : g.classes()) ninv += c.is_involution_class;
    EXPECT_EQ(static_cast<int>(cls.size()), ninv) << label;
    EXPECT_EQ(reps.size(), cls.size()) << label;
  }
}
