#include "klcells/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace klc::cache {

namespace fs = std::filesystem;
using json = nlohmann::json;
using cox::Elt;
using hecke::Terms;
using num::Integer;
using num::LaurentPoly;

namespace {

const char* kPrefix = "klcells-";

json encode(const LaurentPoly& p) {
  json a = json::array();
  a.push_back(p.low());
  for (auto& c : p.raw()) a.push_back(c.str());
  return a;
}

LaurentPoly decode_poly(const json& a, size_t from) {
  std::vector<std::pair<int, Integer>> terms;
  int lo = a.at(from).get<int>();
  for (size_t i = from + 1; i < a.size(); ++i)
    terms.emplace_back(lo + static_cast<int>(i - from - 1), Integer(mpz_class(a[i].get<std::string>())));
  return LaurentPoly::from_terms(terms);
}

json encode(const Terms& t) {
  json a = json::array();
  for (auto& [y, p] : t) {
    json e = encode(p);
    e.insert(e.begin(), y);
    a.push_back(std::move(e));
  }
  return a;
}

Terms decode_terms(const json& a, int size) {
  Terms t;
  for (auto& e : a) {
    int y = e.at(0).get<int>();
    if (y < 0 || y >= size) throw std::runtime_error("element id out of range");
    t.emplace_back(y, decode_poly(e, 1));
  }
  return t;
}

json matrix_json(const cox::CoxeterSystem& sys) { return json(sys.matrix); }

}  // namespace

std::string default_dir() {
  if (const char* d = std::getenv("KLCELLS_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/klcells";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/klcells";
  return ".klcells-cache";
}

std::string key(const cox::CoxeterSystem& sys, const std::vector<int>& weights) {
  std::string s = matrix_json(sys).dump() + "|" + json(weights).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_for(const std::string& dir, const cox::CoxeterSystem& sys, const std::vector<int>& weights) {
  return (fs::path(dir) / (kPrefix + key(sys, weights) + ".json")).string();
}

void store(const std::string& dir, const hecke::KLTable& kl, bool a_full_sweep) {
  const auto& g = kl.group();
  const auto& sys = g.system();
  json j;
  j["version"] = kVersion;
  j["key"] = key(sys, kl.weights().values());
  j["group"] = sys.type_label;
  j["matrix"] = matrix_json(sys);
  j["weights"] = kl.weights().values();
  j["size"] = g.size();
  j["a"] = kl.a_values();
  j["a_full_sweep"] = a_full_sweep;
  json c = json::array(), gen = json::array();
  for (Elt w = 0; w < g.size(); ++w) c.push_back(encode(kl.c(w)));
  for (int s = 0; s < g.rank(); ++s)
    for (Elt w = 0; w < g.size(); ++w) gen.push_back(encode(kl.gen_product(s, w)));
  j["c"] = std::move(c);
  j["gen"] = std::move(gen);
  fs::create_directories(dir);
  std::string path = file_for(dir, sys, kl.weights().values());
  std::string tmp = path + ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) throw std::runtime_error("cache: cannot write " + tmp);
  }
  fs::rename(tmp, path);
}

Stored load(const std::string& dir, const cox::CoxeterGroup& g, const hecke::WeightFunction& phi, std::string* why) {
  Stored st;
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    st.kl.reset();
    return std::move(st);
  };
  std::string path = file_for(dir, g.system(), phi.values());
  std::ifstream in(path);
  if (!in) return fail("miss");
  try {
    json j = json::parse(in);
    if (j.at("version").get<int>() != kVersion) return fail("version mismatch");
    if (j.at("matrix") != matrix_json(g.system()) || j.at("weights").get<std::vector<int>>() != phi.values())
      return fail("key collision");
    int n = j.at("size").get<int>();
    if (n != g.size()) return fail("group size mismatch");
    std::vector<Terms> c, gen;
    for (auto& e : j.at("c")) c.push_back(decode_terms(e, n));
    for (auto& e : j.at("gen")) gen.push_back(decode_terms(e, n));
    st.kl = std::make_unique<hecke::KLTable>(g, phi, std::move(c), std::move(gen));
    st.a_values = j.at("a").get<std::vector<int>>();
    st.a_full_sweep = j.at("a_full_sweep").get<bool>();
    if (!st.a_values.empty() && static_cast<int>(st.a_values.size()) != n) return fail("a-values have the wrong size");
  } catch (const std::exception& e) {
    return fail(std::string("corrupt: ") + e.what());
  }
  // spot check
  std::mt19937_64 rng(std::random_device{}());
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  int samples = std::max(1, g.size() / 100);
  const auto& kl = *st.kl;
  for (int i = 0; i < samples; ++i) {
    Elt w = pick(rng);
    if (!kl.verify_element(w)) return fail("c_w check failed at element " + std::to_string(w));
    for (int s = 0; s < g.rank(); ++s) {
      auto prod = kl.to_c_basis(kl.algebra().mul(kl.c_element(g.generator(s)), kl.c_element(w)));
      if (!(prod == hecke::HeckeElement::from_terms(kl.gen_product(s, w))))
        return fail("generator product check failed at element " + std::to_string(w));
    }
  }
  if (why) *why = "hit";
  return st;
}

std::vector<Entry> list(const std::string& dir) {
  std::vector<Entry> out;
  if (!fs::is_directory(dir)) return out;
  for (auto& de : fs::directory_iterator(dir)) {
    auto name = de.path().filename().string();
    if (name.rfind(kPrefix, 0) != 0 || de.path().extension() != ".json") continue;
    Entry e;
    e.file = de.path().string();
    e.bytes = static_cast<long long>(de.file_size());
    try {
      std::ifstream in(de.path());
      json j = json::parse(in);
      e.group = j.at("group").get<std::string>();
      auto w = j.at("weights").get<std::vector<int>>();
      for (size_t i = 0; i < w.size(); ++i) e.weights += (i ? "," : "") + std::to_string(w[i]);
    } catch (const std::exception&) {
      e.group = "(unreadable)";
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.file < b.file; });
  return out;
}

int purge(const std::string& dir) {
  int n = 0;
  if (!fs::is_directory(dir)) return 0;
  for (auto& de : fs::directory_iterator(dir)) {
    auto name = de.path().filename().string();
    if (name.rfind(kPrefix, 0) != 0) continue;
    fs::remove(de.path());
    ++n;
  }
  return n;
}

}  // namespace klc::cache
