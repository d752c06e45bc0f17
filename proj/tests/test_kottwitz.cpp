#include <gtest/gtest.h>

#include <map>
#include <set>

#include "klcells/kottwitz.hpp"

using namespace klc;
using namespace klc::kott;
using chars::AlgebraicNumber;

namespace {

const Analysis& get(const std::string& label, std::vector<int> w = {}) {
  static std::map<std::pair<std::string, std::vector<int>>, std::unique_ptr<Analysis>> cache;
  auto& slot = cache[{label, w}];
  if (!slot) {
    AnalysisOptions o;
    o.weights = w;
    slot = analyze(label, o);
  }
  return *slot;
}

int class_of_identity(const CoxeterGroup& g) { return g.class_of(0); }

bool is_trivial(const chars::CharacterTable& t, const ClassFunction& f) { return f == t.values[t.trivial]; }

void expect_passed(const VerificationReport& r, const std::string& name) {
  auto* c = r.find(name);
  ASSERT_NE(c, nullptr) << name;
  EXPECT_EQ(c->status, Check::Status::pass) << r.group << " " << r.phi << " " << name << ": " << c->details;
}

}  // namespace

TEST(Kottwitz, IdentityClassGivesTrivial) {
  for (auto label : {"A1", "A3", "B2", "H3", "I2(7)"}) {
    const auto& a = get(label);
    auto rho = rho_character(*a.group, {class_of_identity(*a.group)});
    EXPECT_TRUE(is_trivial(a.table, rho)) << label;
    EXPECT_EQ(rho_via_induction(a.table, class_of_identity(*a.group)), rho) << label;
  }
}

TEST(Kottwitz, RejectsNonInvolutionClass) {
  const auto& a = get("A2");
  const auto& g = *a.group;
  for (size_t c = 0; c < g.classes().size(); ++c)
    if (!g.classes()[c].is_involution_class) {
      EXPECT_THROW(rho_character(g, {static_cast<int>(c)}), std::invalid_argument);
      EXPECT_THROW(rho_via_induction(a.table, static_cast<int>(c)), std::invalid_argument);
    }
}

TEST(Kottwitz, TranspositionsOfS3) {
  const auto& a = get("A2");
  const auto& g = *a.group;
  const auto& t = a.table;
  int cls = g.class_of(g.generator(0));
  auto m = involution_module(g, {cls});
  EXPECT_EQ(m.dim(), 3);
  EXPECT_TRUE(m.check_relations(g));
  auto rho = m.character(g);
  EXPECT_EQ(rho[g.class_of(0)], AlgebraicNumber(3));
  // trace of s is -1: sign plus reflection
  EXPECT_EQ(rho[cls], AlgebraicNumber(-1));
  auto mult = t.multiplicities(rho);
  for (int chi = 0; chi < t.size(); ++chi) EXPECT_EQ(mult[chi], chi == t.trivial ? 0 : 1);
  EXPECT_EQ(rho_via_induction(t, cls), rho);
}

TEST(Kottwitz, ConstructionsAgree) {
  for (auto label : {"A3", "A4", "B2", "B3", "D4", "H3", "I2(6)", "I2(9)", "B2xA1"}) {
    const auto& a = get(label);
    for (int c : involution_classes(*a.group)) {
      auto m = involution_module(*a.group, {c});
      ASSERT_TRUE(m.check_relations(*a.group)) << label;
      auto rho = m.character(*a.group);
      EXPECT_EQ(rho[a.group->class_of(0)], AlgebraicNumber(m.dim()));
      EXPECT_EQ(rho_via_induction(a.table, c), rho) << label << " class " << c;
    }
  }
}

TEST(Kottwitz, B2PairsUnderLongestElement) {
  const auto& a = get("B2");
  const auto& g = *a.group;
  auto inv = involution_classes(g);
  EXPECT_EQ(inv.size(), 4u);
  Elt w0 = g.longest();
  std::set<int> seen;
  for (int c : inv) {
    int c2 = g.class_of(g.multiply(g.classes()[c].min_length_rep, w0));
    // reflections times the half-turn stay in their class; e and w0 swap
    EXPECT_EQ(c2 != c, c == g.class_of(0) || c == g.class_of(w0));
    EXPECT_EQ(rho_character(g, {c2}), a.table.tensor(rho_character(g, {c}), a.table.values[a.table.sign]));
    seen.insert(c2);
  }
  EXPECT_EQ(seen.size(), 4u);
  // {w0}: induced from the whole group, one-dimensional
  int cw0 = g.class_of(w0);
  auto rho = rho_via_induction(a.table, cw0);
  EXPECT_EQ(rho[g.class_of(0)], AlgebraicNumber(1));
  EXPECT_GE(a.table.index_of(rho), 0);
}

TEST(Kottwitz, ClassesMetBySmallCells) {
  const auto& a = get("A3");
  const auto& g = *a.group;
  EXPECT_EQ(classes_met(g, {0}), std::vector<int>{g.class_of(0)});
  EXPECT_EQ(classes_met(g, {g.longest()}), std::vector<int>{g.class_of(g.longest())});
}

TEST(Kottwitz, FullReportEqualParameters) {
  for (auto label : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(5)", "I2(8)", "B2xA1"}) {
    auto r = verify_all(get(label));
    for (auto& c : r.checks) EXPECT_NE(c.status, Check::Status::fail) << label << " " << c.name << ": " << c.details;
    for (auto n : {"kottwitz.per_class", "kottwitz.all_involutions", "main.a", "main.b", "main.conjecture",
                   "identity.gcc", "identity.smooth", "rho.construction_agreement", "hecke.centrality"})
      expect_passed(r, n);
    // report is sorted and each name appears once
    for (size_t i = 1; i < r.checks.size(); ++i) EXPECT_LT(r.checks[i - 1].name, r.checks[i].name);
  }
}

TEST(Kottwitz, ClassicalCountsAgree) {
  for (auto label : {"B2", "B3", "D4"}) {
    auto r = verify_all(get(label));
    expect_passed(r, "main.c");
    expect_passed(r, "identity.classical");
  }
  auto r = verify_all(get("H3"));
  EXPECT_EQ(r.find("main.c")->status, Check::Status::skipped);
}

TEST(Kottwitz, UnequalParameters) {
  std::vector<std::pair<std::string, std::vector<int>>> runs = {
      {"B2", {2, 1}}, {"B2", {3, 2}}, {"B2", {3, 1}}, {"B3", {2, 1, 1}}, {"B3", {1, 3, 3}}, {"I2(6)", {3, 2}}, {"I2(8)", {1, 3}}};
  for (auto& [label, w] : runs) {
    auto r = verify_all(get(label, w));
    for (auto& c : r.checks) EXPECT_NE(c.status, Check::Status::fail) << label << " " << c.name << ": " << c.details;
    expect_passed(r, "main.conjecture");
    EXPECT_EQ(r.find("kottwitz.per_class")->status, Check::Status::skipped);
  }
}

TEST(Kottwitz, W0TwistSkippedWhenNotCentral) {
  auto r = verify_all(get("A3"));
  EXPECT_EQ(r.find("rho.w0_twist")->status, Check::Status::skipped);
  auto r2 = verify_all(get("D4"));
  expect_passed(r2, "rho.w0_twist");
}
