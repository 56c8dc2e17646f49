#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfgp/gp_tree.hpp"
#include "bfgp/seed_group.hpp"

namespace bfgp {

struct SizeOutcome {
  int seed_nl = 0;
  int resulting_nl = 0;  // minimum across groups
  bool balanced = false;  // all groups balanced
  int groups_passed = 0;
  int groups_total = 0;
};

struct GeneralityReport {
  // keyed by resulting function size (seed n + k)
  std::map<int, SizeOutcome> per_size;
  bool general = false;
  // first failing (size, group index), set when not general
  std::optional<std::pair<int, int>> first_failure;
};

// Applies the unchanged tree to every group at every size; a (size, group)
// passes when the resulting function is balanced and reaches the size's
// target nonlinearity. test_sets and targets are keyed by resulting size.
GeneralityReport test_generality(
    const GpTree& tree, int k,
    const std::map<int, std::vector<SeedGroup>>& test_sets,
    const std::map<int, int>& targets);

struct BootstrapLevel {
  int n = 0;  // variable count of this level's seeds
  std::vector<SeedGroup> groups;
};

struct BootstrapResult {
  std::vector<BootstrapLevel> levels;  // produced levels, in order
  bool completed = false;
  std::string diagnostic;  // set when the chain halted early
};

// Feeds the construction its own outputs as seeds, `levels` times. Each base
// group yields one next-level group whose s seeds come from s distinct seed
// orderings. Outputs must re-measure balanced with one common nonlinearity;
// otherwise the chain halts at the last valid level with a diagnostic.
BootstrapResult bootstrap(const GpTree& tree, int k,
                          const std::vector<SeedGroup>& base_groups,
                          int levels);

}  // namespace bfgp
