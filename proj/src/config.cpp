#include "bfgp/config.hpp"

#include <fstream>
#include <sstream>

#include "bfgp/constructions.hpp"
#include "bfgp/tables.hpp"

namespace bfgp {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_text(buf.str(), path);
}

KeyValueFile KeyValueFile::parse_text(const std::string& text,
                                      const std::string& origin) {
  KeyValueFile kv;
  kv.origin_ = origin;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(origin + ":" + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError(origin + ":" + std::to_string(lineno) +
                       ": empty key or value");
    if (kv.values_.count(key))
      throw UsageError(origin + ":" + std::to_string(lineno) +
                       ": duplicate key \"" + key + "\"");
    kv.values_[key] = value;
    kv.consumed_[key] = false;
  }
  return kv;
}

std::string KeyValueFile::get_str(const std::string& key,
                                  const std::string& fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_[key] = true;
  return it->second;
}

int KeyValueFile::get_int(const std::string& key, int fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_[key] = true;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw UsageError(origin_ + ": key \"" + key + "\" is not an integer");
  }
}

long long KeyValueFile::get_ll(const std::string& key, long long fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_[key] = true;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw UsageError(origin_ + ": key \"" + key + "\" is not an integer");
  }
}

double KeyValueFile::get_double(const std::string& key, double fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_[key] = true;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw UsageError(origin_ + ": key \"" + key + "\" is not a number");
  }
}

uint64_t KeyValueFile::get_u64(const std::string& key, uint64_t fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_[key] = true;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw UsageError(origin_ + ": key \"" + key + "\" is not an integer");
  }
}

std::optional<int> KeyValueFile::get_opt_int(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  consumed_[key] = true;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw UsageError(origin_ + ": key \"" + key + "\" is not an integer");
  }
}

void KeyValueFile::reject_unknown() const {
  std::string unknown;
  for (const auto& [key, used] : consumed_)
    if (!used) unknown += (unknown.empty() ? "" : ", ") + key;
  if (!unknown.empty())
    throw UsageError(origin_ + ": unknown keys: " + unknown);
}

int ExperimentConfig::resolved_target_nl() const {
  if (target_nl) return *target_nl;
  if (auto chain = construction_chain_nl(size())) return *chain;
  return concatenation_resulting_nl(n, nl);
}

double ExperimentConfig::resolved_fit1_target() const {
  if (fit1_target) return *fit1_target;
  if (auto best = best_known_balanced_nl(size())) return *best;
  return resolved_target_nl();
}

FitnessSpec ExperimentConfig::fitness_spec() const {
  FitnessSpec spec;
  spec.kind = ev;
  spec.target_val = resolved_fit1_target();
  return spec;
}

EvolverConfig ExperimentConfig::evolver_config() const {
  EvolverConfig engine;
  engine.population_size = population;
  engine.max_depth = max_depth;
  engine.mutation_prob = mutation_prob;
  engine.budget = budget;
  engine.runs = runs;
  engine.rng_seed = rng_seed;
  return engine;
}

void ExperimentConfig::validate() const {
  if (s < 1 || s > 8) throw UsageError("seed_count must be in 1..8");
  if (k < 1 || k > 4) throw UsageError("extra_vars must be in 1..4");
  if (n < 2 || n + k > TruthTable::kMaxVars)
    throw UsageError("seed_vars out of range");
  if (groups < 1) throw UsageError("groups must be >= 1");
  if (bent_seeds && n % 2 != 0)
    throw UsageError("bent seeds need an even seed_vars");
  if (!bent_seeds && nl < 0) throw UsageError("seed_nl must be >= 0");
  if (population < 3) throw UsageError("population must be >= 3");
  if (budget <= population)
    throw UsageError("budget must exceed the population size");
  if (runs < 1) throw UsageError("runs must be >= 1");
  if (mutation_prob < 0 || mutation_prob > 1)
    throw UsageError("mutation_prob must be in [0,1]");
}

void ExperimentConfig::apply_scale(bool full_scale) {
  if (full_scale) {
    budget = 500000;
    runs = 30;
  }
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path,
                                             bool full_scale) {
  KeyValueFile kv = KeyValueFile::parse_file(path);
  ExperimentConfig cfg;
  cfg.apply_scale(full_scale);
  cfg.s = kv.get_int("seed_count", cfg.s);
  cfg.n = kv.get_int("seed_vars", cfg.n);
  cfg.nl = kv.get_int("seed_nl", cfg.nl);
  std::string ev = kv.get_str("fitness", std::string(1, fitness_letter(cfg.ev)));
  if (ev.size() != 1) throw UsageError("fitness must be A, B or C");
  cfg.ev = fitness_kind_from_letter(ev[0]);
  cfg.k = kv.get_int("extra_vars", cfg.k);
  int obj = kv.get_int("objective", cfg.obj == ObjectiveKind::NlOnly ? 1 : 2);
  if (obj != 1 && obj != 2) throw UsageError("objective must be 1 or 2");
  cfg.obj = obj == 1 ? ObjectiveKind::NlOnly : ObjectiveKind::NlWithSpectrum;
  std::string type = kv.get_str("seed_type", cfg.bent_seeds ? "bent" : "balanced");
  if (type != "balanced" && type != "bent")
    throw UsageError("seed_type must be balanced or bent");
  cfg.bent_seeds = type == "bent";
  cfg.groups = kv.get_int("groups", cfg.groups);
  cfg.target_nl = kv.get_opt_int("target_nl");
  if (auto t = kv.get_opt_int("fit1_target")) cfg.fit1_target = *t;
  cfg.population = kv.get_int("population", cfg.population);
  cfg.max_depth = kv.get_int("max_depth", cfg.max_depth);
  cfg.mutation_prob = kv.get_double("mutation_prob", cfg.mutation_prob);
  cfg.budget = kv.get_ll("budget", cfg.budget);
  cfg.runs = kv.get_int("runs", cfg.runs);
  cfg.rng_seed = kv.get_u64("rng_seed", cfg.rng_seed);
  kv.reject_unknown();
  cfg.validate();
  return cfg;
}

}  // namespace bfgp
