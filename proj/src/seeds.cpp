#include "bfgp/seeds.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "bfgp/constructions.hpp"
#include "bfgp/walsh.hpp"

namespace fs = std::filesystem;

namespace bfgp {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Evolved:
      return "evolved";
    case Provenance::Bent:
      return "bent";
    case Provenance::File:
      return "file";
    case Provenance::Bootstrapped:
      return "bootstrapped";
  }
  return "?";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "evolved") return Provenance::Evolved;
  if (name == "bent") return Provenance::Bent;
  if (name == "file") return Provenance::File;
  if (name == "bootstrapped") return Provenance::Bootstrapped;
  throw std::invalid_argument("unknown provenance \"" + name + "\"");
}

void verify_seed_group(const SeedGroup& group, bool balanced_required) {
  if (group.seeds.empty()) throw std::runtime_error("seed group is empty");
  int n = group.seeds[0].n();
  for (int i = 0; i < group.s(); ++i) {
    const TruthTable& f = group.seeds[i];
    if (f.n() != n)
      throw std::runtime_error("seed " + std::to_string(i) +
                               " has mismatched variable count");
    int nl = nonlinearity(f);
    if (nl != group.declared_nl)
      throw std::runtime_error(
          "seed " + std::to_string(i) + " measures nonlinearity " +
          std::to_string(nl) + ", declared " +
          std::to_string(group.declared_nl));
    if (balanced_required && !f.balanced())
      throw std::runtime_error("seed " + std::to_string(i) + " is unbalanced");
  }
}

namespace {

// inner-product function with a random affine part; bent for even n, same
// spectrum magnitudes as the plain inner product
TruthTable random_bent(int n, Rng& rng) {
  TruthTable f = inner_product_function(n);
  uint64_t a = rng.below(uint64_t{1} << n);
  for (int j = 0; j < n; ++j)
    if ((a >> j) & 1) f = f ^ TruthTable::variable(n, j);
  if (rng.coin()) f = ~f;
  return f;
}

std::vector<TruthTable> evolve_seed_pool(const SeedRequest& req, int needed,
                                         Rng& rng) {
  TerminalContext ctx;
  ctx.k = req.n;
  ctx.s = 0;

  EvolverConfig engine;
  engine.ctx = ctx;
  engine.population_size = req.population;
  engine.max_depth = req.max_depth;
  engine.mutation_prob = req.mutation_prob;
  engine.budget = req.budget_per_attempt;
  engine.runs = 1;

  std::set<TruthTable> harvest;
  int best_seen = -1;
  TreeEvaluator evaluator(ctx);

  for (int attempt = 0; attempt < req.max_attempts; ++attempt) {
    // harvest every function of the run that matches the request, not just
    // the run winner; one run usually yields many distinct tables
    auto fitness = [&](const GpTree& tree) {
      TruthTable f = evaluator.eval(tree);
      int64_t bal = balancedness_penalty(f);
      if (bal != 0) return -static_cast<double>(bal);
      WalshSpectrum w = walsh_transform(f);
      int nl = nonlinearity(w);
      if (nl > best_seen) best_seen = nl;
      if (nl == req.nl &&
          static_cast<int>(harvest.size()) < needed)
        harvest.insert(f);
      double value = nl;
      if (req.obj == ObjectiveKind::NlWithSpectrum)
        value += 1.0 - static_cast<double>(w.count_max_abs()) /
                           static_cast<double>(f.size());
      return value;
    };
    Rng run_rng(Rng::derive(rng.next_u64(), attempt));
    run(engine, fitness, run_rng);
    if (static_cast<int>(harvest.size()) >= needed) break;
  }
  if (static_cast<int>(harvest.size()) < needed)
    throw std::runtime_error(
        "seed evolution could not collect " + std::to_string(needed) +
        " balanced functions of nonlinearity " + std::to_string(req.nl) +
        " on n=" + std::to_string(req.n) +
        " (best achieved: " + std::to_string(best_seen) + ")");
  return {harvest.begin(), harvest.end()};
}

}  // namespace

std::vector<SeedGroup> make_seed_groups(const SeedRequest& request, Rng& rng) {
  if (request.source == SeedRequest::Source::File) {
    auto groups = load_seed_groups(request.directory);
    if (static_cast<int>(groups.size()) < request.groups)
      throw std::runtime_error("seed directory " + request.directory +
                               " holds " + std::to_string(groups.size()) +
                               " groups, need " +
                               std::to_string(request.groups));
    groups.resize(request.groups);
    for (auto& g : groups) verify_seed_group(g, false);
    return groups;
  }

  int needed = request.s * request.groups;
  std::vector<TruthTable> pool;
  int declared;
  Provenance provenance;

  if (request.source == SeedRequest::Source::Bent) {
    if (request.n % 2 != 0)
      throw std::runtime_error(
          "bent seeds need an even variable count, requested n=" +
          std::to_string(request.n));
    declared = (1 << (request.n - 1)) - (1 << (request.n / 2 - 1));
    provenance = Provenance::Bent;
    std::set<TruthTable> seen;
    while (static_cast<int>(seen.size()) < needed)
      seen.insert(random_bent(request.n, rng));
    pool.assign(seen.begin(), seen.end());
  } else {
    declared = request.nl;
    provenance = Provenance::Evolved;
    pool = evolve_seed_pool(request, needed, rng);
  }

  // shuffle so group membership does not follow table ordering
  for (size_t i = pool.size() - 1; i > 0; --i)
    std::swap(pool[i], pool[rng.below(i + 1)]);

  std::vector<SeedGroup> groups;
  groups.reserve(request.groups);
  for (int g = 0; g < request.groups; ++g) {
    SeedGroup group;
    group.provenance = provenance;
    group.declared_nl = declared;
    for (int i = 0; i < request.s; ++i)
      group.seeds.push_back(pool[g * request.s + i]);
    verify_seed_group(group, request.source == SeedRequest::Source::Evolved);
    groups.push_back(std::move(group));
  }
  return groups;
}

void save_seed_group(const std::string& dir, const SeedGroup& group) {
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["s"] = group.s();
  manifest["n"] = group.n();
  manifest["declared_nl"] = group.declared_nl;
  manifest["provenance"] = provenance_name(group.provenance);
  std::ofstream os(fs::path(dir) / "manifest.json");
  if (!os) throw std::runtime_error("cannot write manifest in " + dir);
  os << manifest.dump(2) << "\n";
  for (int i = 0; i < group.s(); ++i)
    save_truth_table(
        (fs::path(dir) / ("seed_" + std::to_string(i) + ".tt")).string(),
        group.seeds[i]);
}

SeedGroup load_seed_group(const std::string& dir) {
  std::ifstream is(fs::path(dir) / "manifest.json");
  if (!is) throw std::runtime_error("cannot read manifest in " + dir);
  nlohmann::json manifest = nlohmann::json::parse(is);
  SeedGroup group;
  group.declared_nl = manifest.at("declared_nl").get<int>();
  group.provenance =
      provenance_from_name(manifest.at("provenance").get<std::string>());
  int s = manifest.at("s").get<int>();
  int n = manifest.at("n").get<int>();
  for (int i = 0; i < s; ++i) {
    TruthTable f = load_truth_table(
        (fs::path(dir) / ("seed_" + std::to_string(i) + ".tt")).string());
    if (f.n() != n)
      throw std::runtime_error("seed file size disagrees with manifest in " +
                               dir);
    group.seeds.push_back(std::move(f));
  }
  return group;
}

void save_seed_groups(const std::string& dir,
                      const std::vector<SeedGroup>& groups) {
  fs::create_directories(dir);
  for (size_t g = 0; g < groups.size(); ++g) {
    char name[32];
    std::snprintf(name, sizeof(name), "group_%02zu", g);
    save_seed_group((fs::path(dir) / name).string(), groups[g]);
  }
}

std::vector<SeedGroup> load_seed_groups(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("seed directory not found: " + dir);
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory() &&
        entry.path().filename().string().rfind("group_", 0) == 0)
      names.push_back(entry.path().string());
  std::sort(names.begin(), names.end());
  if (names.empty())
    throw std::runtime_error("seed directory holds no groups: " + dir);
  std::vector<SeedGroup> groups;
  groups.reserve(names.size());
  for (const auto& name : names) groups.push_back(load_seed_group(name));
  return groups;
}

}  // namespace bfgp
