#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klcells/characters.hpp"

namespace klc {

struct AnalysisOptions {
  std::vector<int> weights;  // empty: equal parameters
  bool full_a_sweep = true;  // a(z) from all products instead of min Delta on two-sided cells
  long long budget = 2000;
  std::string cache_dir;     // empty: no cache
};

// Everything computed for one (W, S, phi), in dependency order.
struct Analysis {
  std::unique_ptr<cox::CoxeterGroup> group;
  std::unique_ptr<hecke::KLTable> kl;
  cells::CellPartition cells;
  chars::CharacterTable table;
  std::vector<chars::ClassFunction> cell_chars;
  std::vector<std::vector<long long>> mult;  // [left cell][chi]
  cells::FamilyAssignment families;
  chars::HeckeCharacterValues hecke_values;
  chars::LeadingData leading;
  std::string cache_status = "off";  // off, hit, or the reason for recomputing

  bool equal_parameters() const { return kl->weights().is_uniform(); }
};

std::unique_ptr<Analysis> analyze(const std::string& label, const AnalysisOptions& opt = {});
std::unique_ptr<Analysis> analyze(const cox::CoxeterSystem& sys, const AnalysisOptions& opt = {});

}  // namespace klc
