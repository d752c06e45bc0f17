#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "klcells/cache.hpp"
#include "klcells/kottwitz.hpp"

using namespace klc;
using cox::Elt;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("klcells-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::unique_ptr<Analysis> run(const std::string& label, const std::string& dir, std::vector<int> w = {}) {
  AnalysisOptions o;
  o.cache_dir = dir;
  o.weights = std::move(w);
  return analyze(label, o);
}

json read(const std::string& f) {
  std::ifstream in(f);
  return json::parse(in);
}

void write(const std::string& f, const json& j) {
  std::ofstream out(f);
  out << j.dump();
}

std::string only_file(const std::string& dir) {
  auto es = cache::list(dir);
  EXPECT_EQ(es.size(), 1u);
  return es.empty() ? "" : es[0].file;
}

void expect_same(const Analysis& a, const Analysis& b) {
  ASSERT_EQ(a.group->size(), b.group->size());
  for (Elt w = 0; w < a.group->size(); ++w) EXPECT_EQ(a.kl->c(w), b.kl->c(w)) << w;
  EXPECT_EQ(a.kl->a_values(), b.kl->a_values());
  EXPECT_EQ(a.cells.left, b.cells.left);
  EXPECT_EQ(a.cells.two_sided, b.cells.two_sided);
  EXPECT_EQ(a.leading.a_char, b.leading.a_char);
  EXPECT_EQ(a.leading.special, b.leading.special);
}

}  // namespace

TEST(Cache, RoundTrip) {
  TempDir d;
  for (auto [label, w] : std::vector<std::pair<std::string, std::vector<int>>>{{"A3", {}}, {"B3", {2, 1, 1}}, {"I2(6)", {3, 1}}}) {
    auto first = run(label, d.str(), w);
    EXPECT_EQ(first->cache_status, "miss");
    auto second = run(label, d.str(), w);
    EXPECT_EQ(second->cache_status, "hit");
    expect_same(*first, *second);
  }
  EXPECT_EQ(cache::list(d.str()).size(), 3u);
  EXPECT_EQ(cache::purge(d.str()), 3);
  EXPECT_TRUE(cache::list(d.str()).empty());
}

TEST(Cache, KeyDependsOnWeights) {
  auto sys = cox::CoxeterSystem::from_label("B2");
  EXPECT_NE(cache::key(sys, {1, 1}), cache::key(sys, {2, 1}));
  EXPECT_EQ(cache::key(sys, {2, 1}), cache::key(sys, {2, 1}));
  EXPECT_NE(cache::key(sys, {1, 1}), cache::key(cox::CoxeterSystem::from_label("A2"), {1, 1}));
}

TEST(Cache, CorruptFileIsRecomputed) {
  TempDir d;
  auto ref = run("B2", d.str());
  auto f = only_file(d.str());
  {
    std::ofstream out(f);
    out << "{\"version\": 1, \"c\": [";
  }
  auto again = run("B2", d.str());
  EXPECT_EQ(again->cache_status.rfind("corrupt", 0), 0u) << again->cache_status;
  expect_same(*ref, *again);
  // the recomputation rewrote the entry
  EXPECT_EQ(run("B2", d.str())->cache_status, "hit");
}

TEST(Cache, VersionAndKeyMismatch) {
  TempDir d;
  run("A2", d.str());
  auto f = only_file(d.str());
  auto j = read(f);
  j["version"] = cache::kVersion + 1;
  write(f, j);
  EXPECT_EQ(run("A2", d.str())->cache_status, "version mismatch");

  j = read(f);
  j["weights"] = std::vector<int>{1, 2};
  write(f, j);
  EXPECT_EQ(run("A2", d.str())->cache_status, "key collision");
}

TEST(Cache, TamperedPolynomialsAreDetected) {
  TempDir d;
  auto ref = run("B3", d.str());
  auto f = only_file(d.str());
  auto j = read(f);
  // scale the T_w coefficient of every c_w (w > e); any sampled element then fails
  for (size_t w = 1; w < j["c"].size(); ++w)
    for (auto& term : j["c"][w])
      if (term[0].get<size_t>() == w) term[2] = "2";
  write(f, j);
  auto again = run("B3", d.str());
  EXPECT_NE(again->cache_status, "hit");
  EXPECT_NE(again->cache_status.find("check failed"), std::string::npos) << again->cache_status;
  expect_same(*ref, *again);
}

TEST(Cache, ReportsAgreeWithAndWithoutCache) {
  TempDir d;
  run("H3", d.str());
  auto hit = run("H3", d.str());
  ASSERT_EQ(hit->cache_status, "hit");
  auto fresh = analyze("H3");
  auto r1 = kott::verify_all(*hit), r2 = kott::verify_all(*fresh);
  ASSERT_EQ(r1.checks.size(), r2.checks.size());
  for (size_t i = 0; i < r1.checks.size(); ++i) {
    EXPECT_EQ(r1.checks[i].name, r2.checks[i].name);
    EXPECT_EQ(r1.checks[i].status, r2.checks[i].status) << r1.checks[i].name;
    EXPECT_EQ(r1.checks[i].details, r2.checks[i].details);
  }
}
