#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klcells/hecke.hpp"

// On-disk cache of KL data, one JSON file per (Coxeter matrix, weights).
namespace klc::cache {

constexpr int kVersion = 1;

// KLCELLS_CACHE_DIR, else $XDG_CACHE_HOME/klcells, else $HOME/.cache/klcells
std::string default_dir();
// FNV-1a of the Coxeter matrix and weights, as 16 hex digits
std::string key(const cox::CoxeterSystem& sys, const std::vector<int>& weights);
std::string file_for(const std::string& dir, const cox::CoxeterSystem& sys, const std::vector<int>& weights);

struct Stored {
  std::unique_ptr<hecke::KLTable> kl;
  std::vector<int> a_values;  // empty if not stored
  bool a_full_sweep = false;
};

// Writes atomically (temp file, rename).
void store(const std::string& dir, const hecke::KLTable& kl, bool a_full_sweep);
// nullptr kl on a miss or on any mismatch; *why says which. A random 1% of the elements
// (at least one) is re-verified against the defining properties of c_w and of c_s c_w.
Stored load(const std::string& dir, const cox::CoxeterGroup& g, const hecke::WeightFunction& phi,
            std::string* why = nullptr);

struct Entry {
  std::string file;
  std::string group;
  std::string weights;
  long long bytes = 0;
};
std::vector<Entry> list(const std::string& dir);
// removes cache files; returns the number removed
int purge(const std::string& dir);

}  // namespace klc::cache
