#include "klcells/analysis.hpp"

#include "klcells/cache.hpp"

namespace klc {

std::unique_ptr<Analysis> analyze(const std::string& label, const AnalysisOptions& opt) {
  return analyze(cox::CoxeterSystem::from_label(label), opt);
}

std::unique_ptr<Analysis> analyze(const cox::CoxeterSystem& sys, const AnalysisOptions& opt) {
  auto an = std::make_unique<Analysis>();
  an->group = std::make_unique<cox::CoxeterGroup>(sys, opt.budget);
  const auto& g = *an->group;
  auto phi = opt.weights.empty() ? hecke::WeightFunction::uniform(g) : hecke::WeightFunction(g, opt.weights);
  cache::Stored st;
  if (!opt.cache_dir.empty()) st = cache::load(opt.cache_dir, g, phi, &an->cache_status);
  bool hit = st.kl != nullptr;
  an->kl = hit ? std::move(st.kl) : std::make_unique<hecke::KLTable>(g, phi);
  an->cells = cells::compute_cells(*an->kl);
  if (hit && !st.a_values.empty() && st.a_full_sweep == opt.full_a_sweep)
    an->kl->set_a_values(st.a_values);
  else
    an->kl->set_a_values(opt.full_a_sweep ? an->kl->a_function_full()
                                          : an->kl->a_function_from_cells(an->cells.two_sided_of));
  if (!opt.cache_dir.empty() && !hit) cache::store(opt.cache_dir, *an->kl, opt.full_a_sweep);
  an->table = chars::ordinary_character_table(g);
  an->cell_chars = cells::left_cell_characters(*an->kl, an->cells, an->table);
  an->mult = cells::left_cell_multiplicities(an->table, an->cell_chars);
  an->families = cells::assign_families(an->cells, an->table, an->mult);
  an->hecke_values = chars::hecke_character_values(*an->kl, an->cells, an->table, an->families);
  an->leading = chars::leading_data(an->hecke_values, an->table);
  return an;
}

}  // namespace klc
