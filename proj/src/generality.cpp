#include "bfgp/generality.hpp"

#include <stdexcept>

#include "bfgp/gp_eval.hpp"
#include "bfgp/walsh.hpp"

namespace bfgp {

GeneralityReport test_generality(
    const GpTree& tree, int k,
    const std::map<int, std::vector<SeedGroup>>& test_sets,
    const std::map<int, int>& targets) {
  GeneralityReport report;
  report.general = true;
  for (const auto& [size, groups] : test_sets) {
    if (groups.empty())
      throw std::invalid_argument("no seed groups for size " +
                                  std::to_string(size));
    auto target_it = targets.find(size);
    if (target_it == targets.end())
      throw std::invalid_argument("no target nonlinearity for size " +
                                  std::to_string(size));
    int target = target_it->second;

    SizeOutcome outcome;
    outcome.groups_total = static_cast<int>(groups.size());
    outcome.seed_nl = groups[0].declared_nl;
    outcome.balanced = true;
    bool first = true;
    for (int g = 0; g < outcome.groups_total; ++g) {
      const SeedGroup& group = groups[g];
      if (group.n() + k != size)
        throw std::invalid_argument(
            "group at size " + std::to_string(size) + " holds " +
            std::to_string(group.n()) + "-variable seeds, expected " +
            std::to_string(size - k));
      TerminalContext ctx;
      ctx.k = k;
      ctx.s = group.s();
      ctx.seeds = group.seeds;
      TruthTable result = eval_tree(tree, ctx);
      bool balanced = result.balanced();
      int nl = nonlinearity(result);
      outcome.balanced = outcome.balanced && balanced;
      outcome.resulting_nl = first ? nl : std::min(outcome.resulting_nl, nl);
      first = false;
      if (balanced && nl >= target) {
        ++outcome.groups_passed;
      } else {
        report.general = false;
        if (!report.first_failure) report.first_failure = {size, g};
      }
    }
    report.per_size[size] = outcome;
  }
  return report;
}

namespace {

// s distinct seed orderings: rotations of the group's seed list
std::vector<TruthTable> rotated(const std::vector<TruthTable>& seeds, int by) {
  std::vector<TruthTable> out;
  int s = static_cast<int>(seeds.size());
  out.reserve(s);
  for (int i = 0; i < s; ++i) out.push_back(seeds[(i + by) % s]);
  return out;
}

}  // namespace

BootstrapResult bootstrap(const GpTree& tree, int k,
                          const std::vector<SeedGroup>& base_groups,
                          int levels) {
  if (base_groups.empty())
    throw std::invalid_argument("bootstrap needs at least one base group");
  BootstrapResult result;
  std::vector<SeedGroup> current = base_groups;
  for (int level = 1; level <= levels; ++level) {
    BootstrapLevel next;
    next.n = current[0].n() + k;
    for (size_t g = 0; g < current.size(); ++g) {
      const SeedGroup& group = current[g];
      SeedGroup produced;
      produced.provenance = Provenance::Bootstrapped;
      int common_nl = -1;
      for (int r = 0; r < group.s(); ++r) {
        TerminalContext ctx;
        ctx.k = k;
        ctx.s = group.s();
        ctx.seeds = rotated(group.seeds, r);
        TruthTable f = eval_tree(tree, ctx);
        if (!f.balanced()) {
          result.diagnostic = "level " + std::to_string(level) + " group " +
                              std::to_string(g) + " ordering " +
                              std::to_string(r) +
                              " produced an unbalanced function";
          return result;
        }
        int nl = nonlinearity(f);
        if (common_nl < 0) common_nl = nl;
        if (nl != common_nl) {
          result.diagnostic = "level " + std::to_string(level) + " group " +
                              std::to_string(g) +
                              " produced mixed nonlinearities (" +
                              std::to_string(common_nl) + " vs " +
                              std::to_string(nl) + ")";
          return result;
        }
        produced.seeds.push_back(std::move(f));
      }
      produced.declared_nl = common_nl;
      next.groups.push_back(std::move(produced));
    }
    current = next.groups;
    result.levels.push_back(std::move(next));
  }
  result.completed = true;
  return result;
}

}  // namespace bfgp
