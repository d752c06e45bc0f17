// Acceptance driver: one PASS/FAIL line per criterion of the manifest.
#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "klcells/classical.hpp"

using namespace klc;
using json = nlohmann::json;

namespace {

struct Run {
  std::unique_ptr<Analysis> an;
  kott::VerificationReport rep;
};

class Runs {
 public:
  explicit Runs(long long budget) : budget_(budget) {}

  // "B3" or "B3@2,1,1"
  Run& get(const std::string& id) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = runs_.find(id);
      if (it != runs_.end()) return *it->second;
    }
    auto r = compute(id);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = runs_[id];
    if (!slot) slot = std::move(r);
    return *slot;
  }

  // independent runs, computed concurrently
  void prefetch(const std::vector<std::string>& specs, unsigned jobs) {
    std::atomic<size_t> next{0};
    std::vector<std::string> errors;
    auto worker = [&] {
      for (size_t i; (i = next++) < specs.size();) {
        try {
          get(specs[i]);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(mu_);
          errors.push_back(specs[i] + ": " + e.what());
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < std::max(1u, jobs); ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    // failures resurface when the criterion asks for the run
    for (auto& e : errors) std::cerr << "  prefetch failed: " << e << "\n";
  }

 private:
  std::unique_ptr<Run> compute(const std::string& id) const {
    auto at = id.find('@');
    AnalysisOptions o;
    o.budget = budget_;
    if (at != std::string::npos) {
      std::stringstream ss(id.substr(at + 1));
      for (std::string x; std::getline(ss, x, ',');) o.weights.push_back(std::stoi(x));
    }
    auto t0 = std::chrono::steady_clock::now();
    auto r = std::make_unique<Run>();
    r->an = analyze(id.substr(0, at), o);
    r->rep = kott::verify_all(*r->an);
    classical::verify_classical(*r->an, r->rep);
    r->rep.finalize();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > 5) std::cerr << "  (" + id + ": " + std::to_string(static_cast<int>(s)) + " s)\n";
    return r;
  }

  long long budget_;
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Run>> runs_;
};

struct Outcome {
  int checked = 0;
  std::vector<std::string> failures;
  void fail(std::string s) { failures.push_back(std::move(s)); }
};

std::vector<std::string> expand(const json& sets, const json& names, bool slow) {
  std::vector<std::string> out;
  for (auto& n : names) {
    auto name = n.get<std::string>();
    for (auto& g : sets.at(name)) out.push_back(g);
    if (slow && sets.contains(name + "_slow"))
      for (auto& g : sets.at(name + "_slow")) out.push_back(g);
  }
  return out;
}

int smooth_count(const Analysis& an) {
  int k = 0;
  for (auto& s : chars::smoothness(an.cells, an.families, an.leading, an.table, an.mult)) k += s.smooth();
  return k;
}

void check_part(Runs& runs, const std::vector<std::string>& groups, const json& part, Outcome& out) {
  bool allow_skip = part.value("allow_skip", false);
  for (auto& g : groups) {
    auto& r = runs.get(g);
    for (auto& pat : part.at("checks")) {
      auto p = pat.get<std::string>();
      int matched = 0;
      for (auto& c : r.rep.checks) {
        if (fnmatch(p.c_str(), c.name.c_str(), 0) != 0) continue;
        ++matched;
        ++out.checked;
        if (c.status == kott::Check::Status::fail ||
            (c.status == kott::Check::Status::skipped && !allow_skip))
          out.fail(g + " " + c.name + " " + kott::status_name(c.status) + ": " + c.details);
      }
      if (!matched) out.fail(g + " has no check matching " + p);
    }
  }
}

Outcome run_criterion(Runs& runs, const json& sets, const json& crit, bool slow) {
  Outcome out;
  for (auto& part : crit.value("parts", json::array()))
    check_part(runs, expand(sets, part.at("runs"), slow), part, out);
  for (auto& row : crit.value("table1", json::array())) {
    if (row.value("slow", false) && !slow) continue;
    auto g = row.at("group").get<std::string>();
    auto& an = *runs.get(g).an;
    int cells = static_cast<int>(an.cells.two_sided.size()), smooth = smooth_count(an);
    ++out.checked;
    if (cells != row.at("cells").get<int>() || smooth != row.at("smooth").get<int>())
      out.fail(g + ": computed (" + std::to_string(cells) + ", " + std::to_string(smooth) + "), expected (" +
               std::to_string(row.at("cells").get<int>()) + ", " + std::to_string(row.at("smooth").get<int>()) + ")");
  }
  for (auto& e : crit.value("all_smooth", json::array())) {
    auto g = e.at("run").get<std::string>();
    auto& an = *runs.get(g).an;
    bool all = smooth_count(an) == static_cast<int>(an.cells.two_sided.size());
    ++out.checked;
    if (all != e.at("expect").get<bool>()) out.fail(g + ": all cells smooth is " + (all ? "true" : "false"));
  }
  if (crit.contains("smoothness_criterion")) {
    auto& sc = crit["smoothness_criterion"];
    for (int n : sc.at("ranks").get<std::vector<int>>()) {
      kott::VerificationReport rep;
      classical::verify_smoothness_criterion_B(n, sc.at("a").get<std::vector<int>>(), rep);
      for (auto& c : rep.checks) {
        ++out.checked;
        if (c.status != kott::Check::Status::pass) out.fail(c.name + ": " + c.details);
      }
    }
  }
  return out;
}

std::vector<std::string> needed_runs(const json& sets, const json& crit, bool slow) {
  std::vector<std::string> out;
  for (auto& part : crit.value("parts", json::array()))
    for (auto& g : expand(sets, part.at("runs"), slow)) out.push_back(g);
  for (auto& row : crit.value("table1", json::array()))
    if (slow || !row.value("slow", false)) out.push_back(row.at("group"));
  for (auto& e : crit.value("all_smooth", json::array())) out.push_back(e.at("run"));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string manifest_path = ACCEPTANCE_MANIFEST;
  bool slow = false;
  std::vector<int> only;
  app.add_option("--manifest", manifest_path, "pinned manifest");
  app.add_flag("--slow", slow, "include F4");
  app.add_option("--only", only, "criterion ids to run");
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--jobs", jobs, "runs computed concurrently");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "cannot open " << manifest_path << "\n";
    return 2;
  }
  json m = json::parse(in);
  Runs runs(m.value("budget", 2000LL));
  {
    std::vector<std::string> specs;
    std::set<std::string> seen;
    for (auto& crit : m.at("criteria")) {
      int id = crit.at("id").get<int>();
      if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
      for (auto& g : needed_runs(m.at("sets"), crit, slow))
        if (seen.insert(g).second) specs.push_back(g);
    }
    // slowest first
    std::stable_partition(specs.begin(), specs.end(), [](const std::string& g) { return g.rfind("F4", 0) == 0; });
    runs.prefetch(specs, jobs);
  }
  bool all_ok = true;
  for (auto& crit : m.at("criteria")) {
    int id = crit.at("id").get<int>();
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = run_criterion(runs, m.at("sets"), crit, slow);
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    bool ok = o.failures.empty();
    all_ok = all_ok && ok;
    std::cout << "criterion " << id << " (" << crit.at("title").get<std::string>() << "): " << (ok ? "PASS" : "FAIL")
              << "  [" << o.checked << " checks" << (slow ? "" : ", F4 skipped") << "]\n";
    for (size_t i = 0; i < o.failures.size() && i < 20; ++i) std::cout << "    " << o.failures[i] << "\n";
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
