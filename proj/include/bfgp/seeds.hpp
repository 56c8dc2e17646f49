#pragma once

#include <string>
#include <vector>

#include "bfgp/evaluation.hpp"
#include "bfgp/evolver.hpp"
#include "bfgp/rng.hpp"
#include "bfgp/seed_group.hpp"

namespace bfgp {

// Where seed functions come from: evolved by plain GP on n variables, drawn
// from the inner-product bent family, or loaded from disk.
struct SeedRequest {
  enum class Source { Evolved, Bent, File };
  Source source = Source::Evolved;
  int s = 2;
  int n = 4;
  int nl = 4;  // required measured nonlinearity (ignored for Bent)
  int groups = 4;
  std::string directory;  // File source: directory of group subdirectories

  // engine knobs for the Evolved source
  ObjectiveKind obj = ObjectiveKind::NlWithSpectrum;
  int population = 500;
  int max_depth = 5;
  double mutation_prob = 0.5;
  long long budget_per_attempt = 50000;
  int max_attempts = 40;
};

// Returns `groups` pairwise-distinct seed groups matching the request.
// Evolved seeds are harvested from plain-GP runs and accepted only when
// balanced with nonlinearity exactly nl; throws (reporting the best
// nonlinearity achieved) when the budget runs out first.
std::vector<SeedGroup> make_seed_groups(const SeedRequest& request, Rng& rng);

// Directory layout: manifest.json {s, n, declared_nl, provenance} plus one
// truth-table file seed_<i>.tt per seed.
void save_seed_group(const std::string& dir, const SeedGroup& group);
SeedGroup load_seed_group(const std::string& dir);

// A set of groups lives in numbered subdirectories group_00, group_01, ...
void save_seed_groups(const std::string& dir,
                      const std::vector<SeedGroup>& groups);
std::vector<SeedGroup> load_seed_groups(const std::string& dir);

}  // namespace bfgp
