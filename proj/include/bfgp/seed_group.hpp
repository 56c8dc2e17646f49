#pragma once

#include <string>
#include <vector>

#include "bfgp/truth_table.hpp"

namespace bfgp {

enum class Provenance { Evolved, Bent, File, Bootstrapped };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// One full assignment of the seed terminals f_0..f_{s-1}: s truth tables of
// the same variable count, all measuring the declared nonlinearity.
struct SeedGroup {
  std::vector<TruthTable> seeds;
  Provenance provenance = Provenance::File;
  int declared_nl = 0;

  int s() const { return static_cast<int>(seeds.size()); }
  int n() const { return seeds.empty() ? 0 : seeds[0].n(); }
};

// Re-measures the group against its declaration; throws std::runtime_error
// describing the first violation. balanced_required adds the BAL = 0 check.
void verify_seed_group(const SeedGroup& group, bool balanced_required);

}  // namespace bfgp
