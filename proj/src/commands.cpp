#include "bfgp/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "bfgp/constructions.hpp"
#include "bfgp/evolver.hpp"
#include "bfgp/generality.hpp"
#include "bfgp/gp_text.hpp"
#include "bfgp/seeds.hpp"
#include "bfgp/tables.hpp"
#include "bfgp/walsh.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace bfgp {

namespace {

std::string two_digits(int v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d", v);
  return buf;
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

void write_json(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

json read_json(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return json::parse(is);
}

// manifest.json carries everything needed to reproduce the run; it is the
// only artifact holding a timestamp
void write_manifest(const std::string& outdir, const std::string& command,
                    const json& options,
                    const std::vector<std::string>& artifacts) {
  json m;
  m["command"] = command;
  m["created"] = timestamp_utc();
  m["options"] = options;
  m["artifacts"] = artifacts;
  write_json(fs::path(outdir) / "manifest.json", m);
}

struct LogRecord {
  long long eval;
  double best;
  int size;
};

void write_log(const std::string& outdir,
               const std::vector<std::vector<LogRecord>>& per_run) {
  std::ostringstream os;
  for (size_t run = 0; run < per_run.size(); ++run)
    for (const auto& rec : per_run[run]) {
      json line;
      line["run"] = run;
      line["eval"] = rec.eval;
      line["best"] = rec.best;
      line["size"] = rec.size;
      os << line.dump() << "\n";
    }
  write_text(fs::path(outdir) / "log.jsonl", os.str());
}

json experiment_json(const ExperimentConfig& cfg) {
  json j;
  j["seed_count"] = cfg.s;
  j["seed_vars"] = cfg.n;
  j["seed_nl"] = cfg.nl;
  j["fitness"] = std::string(1, fitness_letter(cfg.ev));
  j["extra_vars"] = cfg.k;
  j["objective"] = cfg.obj == ObjectiveKind::NlOnly ? 1 : 2;
  j["seed_type"] = cfg.bent_seeds ? "bent" : "balanced";
  j["groups"] = cfg.groups;
  if (cfg.target_nl) j["target_nl"] = *cfg.target_nl;
  if (cfg.fit1_target) j["fit1_target"] = *cfg.fit1_target;
  j["population"] = cfg.population;
  j["max_depth"] = cfg.max_depth;
  j["mutation_prob"] = cfg.mutation_prob;
  j["budget"] = cfg.budget;
  j["runs"] = cfg.runs;
  j["rng_seed"] = cfg.rng_seed;
  return j;
}

ExperimentConfig experiment_from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.s = j.at("seed_count").get<int>();
  cfg.n = j.at("seed_vars").get<int>();
  cfg.nl = j.at("seed_nl").get<int>();
  cfg.ev = fitness_kind_from_letter(j.at("fitness").get<std::string>()[0]);
  cfg.k = j.at("extra_vars").get<int>();
  cfg.obj = j.at("objective").get<int>() == 1 ? ObjectiveKind::NlOnly
                                              : ObjectiveKind::NlWithSpectrum;
  cfg.bent_seeds = j.at("seed_type").get<std::string>() == "bent";
  cfg.groups = j.at("groups").get<int>();
  if (j.contains("target_nl")) cfg.target_nl = j.at("target_nl").get<int>();
  if (j.contains("fit1_target"))
    cfg.fit1_target = j.at("fit1_target").get<double>();
  cfg.population = j.at("population").get<int>();
  cfg.max_depth = j.at("max_depth").get<int>();
  cfg.mutation_prob = j.at("mutation_prob").get<double>();
  cfg.budget = j.at("budget").get<long long>();
  cfg.runs = j.at("runs").get<int>();
  cfg.rng_seed = j.at("rng_seed").get<uint64_t>();
  return cfg;
}

}  // namespace

// ---------------------------------------------------------------------------
// evolve-fn

int cmd_evolve_fn(const EvolveFnOptions& opt) {
  if (opt.outdir.empty()) throw UsageError("evolve-fn needs an output dir");
  if (opt.n < 2 || opt.n > TruthTable::kMaxVars)
    throw UsageError("variable count out of range");
  int target = opt.target_nl.value_or(best_known_balanced_nl(opt.n).value_or(0));

  TerminalContext ctx;
  ctx.k = opt.n;
  ctx.s = 0;
  TreeEvaluator evaluator(ctx);

  EvolverConfig engine;
  engine.ctx = ctx;
  engine.population_size = opt.population;
  engine.max_depth = opt.max_depth;
  engine.mutation_prob = opt.mutation_prob;
  engine.budget = opt.budget;
  engine.runs = opt.runs;
  engine.rng_seed = opt.rng_seed;

  auto fitness = [&](const GpTree& tree) {
    return objective(evaluator.eval(tree), opt.obj);
  };

  std::vector<std::vector<LogRecord>> logs(engine.runs);
  auto progress = [&](int run, long long eval, double best, int size) {
    logs[run].push_back({eval, best, size});
  };
  std::vector<RunResult> results = run_batch(engine, fitness, opt.jobs, progress);

  fs::create_directories(fs::path(opt.outdir) / "runs");
  json summary;
  summary["n"] = opt.n;
  summary["target_nl"] = target;
  summary["objective"] = opt.obj == ObjectiveKind::NlOnly ? 1 : 2;
  json run_rows = json::array();
  std::vector<std::string> artifacts = {"summary.json", "summary.txt",
                                        "log.jsonl", "best.tt"};

  int best_run = 0;
  int best_nl = -1;
  std::vector<int> nls;
  int successes = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    TruthTable f = evaluator.eval(results[i].best_tree);
    bool balanced = f.balanced();
    int nl = nonlinearity(f);
    nls.push_back(nl);
    bool reached = balanced && nl >= target;
    if (reached) ++successes;
    if (balanced && nl > best_nl) {
      best_nl = nl;
      best_run = static_cast<int>(i);
    }
    std::string stem = "runs/run_" + two_digits(static_cast<int>(i));
    save_truth_table((fs::path(opt.outdir) / (stem + ".tt")).string(), f);
    write_text(fs::path(opt.outdir) / (stem + ".tree"),
               serialize_tree(results[i].best_tree) + "\n");
    artifacts.push_back(stem + ".tt");
    artifacts.push_back(stem + ".tree");
    json row;
    row["run"] = i;
    row["nl"] = nl;
    row["balanced"] = balanced;
    row["fitness"] = results[i].best_fitness;
    row["tree_size"] = results[i].best_tree.size();
    row["evaluations"] = results[i].evaluations_used;
    row["rng_seed"] = results[i].rng_seed;
    row["reached_target"] = reached;
    run_rows.push_back(row);
  }
  summary["runs"] = run_rows;

  int nl_min = *std::min_element(nls.begin(), nls.end());
  int nl_max = *std::max_element(nls.begin(), nls.end());
  double nl_avg = 0;
  for (int v : nls) nl_avg += v;
  nl_avg /= static_cast<double>(nls.size());
  int at_max = static_cast<int>(std::count(nls.begin(), nls.end(), nl_max));
  summary["nl_min"] = nl_min;
  summary["nl_avg"] = nl_avg;
  summary["nl_max"] = nl_max;
  summary["max_rate"] = static_cast<double>(at_max) / nls.size();
  summary["success_rate"] = static_cast<double>(successes) / nls.size();

  TruthTable best = evaluator.eval(results[best_run].best_tree);
  save_truth_table((fs::path(opt.outdir) / "best.tt").string(), best);
  write_json(fs::path(opt.outdir) / "summary.json", summary);

  std::ostringstream txt;
  txt << "plain GP on n=" << opt.n << ", target NL " << target << "\n";
  txt << "min NL " << nl_min << "  avg NL " << nl_avg << "  max NL " << nl_max
      << "  at-max " << at_max << "/" << nls.size() << "\n";
  txt << "runs reaching target: " << successes << "/" << nls.size() << "\n";
  write_text(fs::path(opt.outdir) / "summary.txt", txt.str());
  write_log(opt.outdir, logs);

  json options;
  options["n"] = opt.n;
  options["target_nl"] = target;
  options["objective"] = opt.obj == ObjectiveKind::NlOnly ? 1 : 2;
  options["population"] = opt.population;
  options["max_depth"] = opt.max_depth;
  options["mutation_prob"] = opt.mutation_prob;
  options["budget"] = opt.budget;
  options["runs"] = opt.runs;
  options["rng_seed"] = opt.rng_seed;
  options["jobs"] = opt.jobs;
  write_manifest(opt.outdir, "evolve-fn", options, artifacts);

  std::cout << "best balanced NL " << best_nl << " (run " << best_run
            << "), target " << target << ": "
            << (successes > 0 ? "reached" : "missed") << "\n";
  return successes > 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// evolve-cons

int cmd_evolve_cons(const EvolveConsOptions& opt) {
  if (opt.outdir.empty()) throw UsageError("evolve-cons needs an output dir");
  const ExperimentConfig& cfg = opt.config;
  cfg.validate();

  Rng rng(Rng::derive(cfg.rng_seed, 0x5eed));
  std::vector<SeedGroup> groups;
  if (!opt.seed_dir.empty()) {
    SeedRequest req;
    req.source = SeedRequest::Source::File;
    req.s = cfg.s;
    req.n = cfg.n;
    req.nl = cfg.nl;
    req.groups = cfg.groups;
    req.directory = opt.seed_dir;
    groups = make_seed_groups(req, rng);
  } else {
    SeedRequest req;
    req.source = cfg.bent_seeds ? SeedRequest::Source::Bent
                                : SeedRequest::Source::Evolved;
    req.s = cfg.s;
    req.n = cfg.n;
    req.nl = cfg.nl;
    req.groups = cfg.groups;
    groups = make_seed_groups(req, rng);
    save_seed_groups((fs::path(opt.outdir) / "seeds").string(), groups);
  }

  for (auto& g : groups) {
    if (g.s() != cfg.s || g.n() != cfg.n)
      throw UsageError("seed groups do not match the experiment shape");
  }

  ConstructionFitness fitness(groups, cfg.k, cfg.obj, cfg.fitness_spec());

  EvolverConfig engine = cfg.evolver_config();
  engine.ctx.k = cfg.k;
  engine.ctx.s = cfg.s;

  std::vector<std::vector<LogRecord>> logs(engine.runs);
  auto progress = [&](int run, long long eval, double best, int size) {
    logs[run].push_back({eval, best, size});
  };
  std::vector<RunResult> results = run_batch(
      engine, [&](const GpTree& t) { return fitness(t); }, opt.jobs, progress);

  int target = cfg.resolved_target_nl();
  auto locally_optimal = [&](const GpTree& tree) {
    for (const auto& g : groups) {
      TerminalContext tctx;
      tctx.k = cfg.k;
      tctx.s = g.s();
      tctx.seeds = g.seeds;
      TruthTable f = eval_tree(tree, tctx);
      if (!f.balanced() || nonlinearity(f) < target) return false;
    }
    return true;
  };

  fs::create_directories(fs::path(opt.outdir) / "trees");
  json summary;
  summary["experiment"] = experiment_json(cfg);
  summary["target_nl"] = target;
  json run_rows = json::array();
  std::vector<std::string> artifacts = {"summary.json", "summary.txt",
                                        "log.jsonl"};
  int flagged = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    bool local = locally_optimal(results[i].best_tree);
    if (local) ++flagged;
    std::string stem = "trees/run_" + two_digits(static_cast<int>(i));
    write_text(fs::path(opt.outdir) / (stem + ".tree"),
               serialize_tree(results[i].best_tree) + "\n");
    artifacts.push_back(stem + ".tree");
    json row;
    row["run"] = i;
    row["fitness"] = results[i].best_fitness;
    row["tree_size"] = results[i].best_tree.size();
    row["locally_optimal"] = local;
    row["evaluations"] = results[i].evaluations_used;
    row["rng_seed"] = results[i].rng_seed;
    run_rows.push_back(row);
  }
  summary["runs"] = run_rows;
  summary["locally_optimal_runs"] = flagged;
  write_json(fs::path(opt.outdir) / "summary.json", summary);

  std::ostringstream txt;
  txt << "experiment (" << cfg.s << "," << cfg.n << "," << cfg.nl << ","
      << fitness_letter(cfg.ev) << "), k=" << cfg.k << ", objective "
      << (cfg.obj == ObjectiveKind::NlOnly ? 1 : 2) << "\n";
  txt << "target NL at size " << cfg.size() << ": " << target << "\n";
  txt << "locally optimal runs: " << flagged << "/" << results.size() << "\n";
  write_text(fs::path(opt.outdir) / "summary.txt", txt.str());
  write_log(opt.outdir, logs);

  json options;
  options["config"] = experiment_json(cfg);
  options["seed_dir"] = opt.seed_dir;
  options["jobs"] = opt.jobs;
  write_manifest(opt.outdir, "evolve-cons", options, artifacts);

  std::cout << "locally optimal runs: " << flagged << "/" << results.size()
            << " (target NL " << target << " at size " << cfg.size() << ")\n";
  return flagged > 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// test-cons

namespace {

std::map<int, std::vector<SeedGroup>> load_testset(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw UsageError("test-set directory not found: " + dir);
  std::map<int, std::vector<SeedGroup>> sets;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_directory()) continue;
    std::string name = entry.path().filename().string();
    if (name.rfind("size_", 0) != 0) continue;
    int size = std::stoi(name.substr(5));
    sets[size] = load_seed_groups(entry.path().string());
  }
  if (sets.empty())
    throw UsageError("no size_<m> subdirectories under " + dir);
  return sets;
}

}  // namespace

int cmd_test_cons(const TestConsOptions& opt) {
  TerminalContext parse_ctx;
  parse_ctx.k = opt.k;
  parse_ctx.s = 16;  // parse leniently; shape checks happen on evaluation
  std::ifstream is(opt.tree_path);
  if (!is) throw UsageError("cannot read tree file " + opt.tree_path);
  std::string line;
  std::getline(is, line);
  GpTree tree = parse_tree(line, parse_ctx);

  auto sets = load_testset(opt.testset_dir);
  std::map<int, int> targets = opt.target_overrides;
  std::vector<int> skipped;
  for (auto it = sets.begin(); it != sets.end();) {
    int size = it->first;
    if (!targets.count(size)) {
      std::optional<int> t;
      if (opt.target_mode == "chain")
        t = construction_chain_nl(size);
      else if (opt.target_mode == "best")
        t = best_known_balanced_nl(size);
      else if (opt.target_mode == "formula")
        t = concatenation_resulting_nl(it->second[0].n(),
                                       it->second[0].declared_nl);
      else
        throw UsageError("unknown target mode \"" + opt.target_mode + "\"");
      if (!t) {
        // fall back to the formula when the table has no entry
        t = concatenation_resulting_nl(it->second[0].n(),
                                       it->second[0].declared_nl);
      }
      targets[size] = *t;
    }
    ++it;
  }

  GeneralityReport report = test_generality(tree, opt.k, sets, targets);

  std::ostringstream txt;
  txt << "size        ";
  for (const auto& [size, row] : report.per_size) txt << "\t" << size;
  txt << "\nseed NL     ";
  for (const auto& [size, row] : report.per_size) txt << "\t" << row.seed_nl;
  txt << "\nresulting NL";
  for (const auto& [size, row] : report.per_size)
    txt << "\t" << row.resulting_nl;
  txt << "\n";
  for (const auto& [size, row] : report.per_size)
    txt << "size " << size << ": target " << targets[size] << ", groups passed "
        << row.groups_passed << "/" << row.groups_total
        << (row.balanced ? "" : ", UNBALANCED output") << "\n";
  txt << "verdict: " << (report.general ? "general" : "not general") << "\n";
  if (report.first_failure)
    txt << "first failure: size " << report.first_failure->first << ", group "
        << report.first_failure->second << "\n";
  std::cout << txt.str();

  if (!opt.outdir.empty()) {
    json j;
    j["tree"] = serialize_tree(tree);
    j["general"] = report.general;
    json rows = json::array();
    for (const auto& [size, row] : report.per_size) {
      json r;
      r["size"] = size;
      r["seed_nl"] = row.seed_nl;
      r["resulting_nl"] = row.resulting_nl;
      r["balanced"] = row.balanced;
      r["groups_passed"] = row.groups_passed;
      r["groups_total"] = row.groups_total;
      r["target"] = targets[size];
      rows.push_back(r);
    }
    j["per_size"] = rows;
    if (report.first_failure) {
      j["first_failure_size"] = report.first_failure->first;
      j["first_failure_group"] = report.first_failure->second;
    }
    write_json(fs::path(opt.outdir) / "report.json", j);
    write_text(fs::path(opt.outdir) / "report.txt", txt.str());
    json options;
    options["tree_path"] = opt.tree_path;
    options["testset_dir"] = opt.testset_dir;
    options["k"] = opt.k;
    options["target_mode"] = opt.target_mode;
    json ov = json::object();
    for (auto& [size, t] : opt.target_overrides)
      ov[std::to_string(size)] = t;
    options["target_overrides"] = ov;
    write_manifest(opt.outdir, "test-cons", options,
                   {"report.json", "report.txt"});
  }
  return report.general ? 0 : 1;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const AnalyzeOptions& opt) {
  if (opt.outdir.empty()) throw UsageError("analyze needs an output dir");
  if (!fs::is_directory(opt.tree_dir))
    throw UsageError("tree directory not found: " + opt.tree_dir);

  TerminalContext parse_ctx;
  parse_ctx.k = opt.k;
  parse_ctx.s = opt.s;
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(opt.tree_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tree")
      names.push_back(entry.path().string());
  std::sort(names.begin(), names.end());
  if (names.empty())
    throw UsageError("no .tree files under " + opt.tree_dir);

  std::vector<GpTree> trees;
  for (const auto& name : names) {
    auto batch = load_trees(name, parse_ctx);
    trees.insert(trees.end(), batch.begin(), batch.end());
  }

  SizeStats stats = size_stats(trees);
  std::ostringstream sizes;
  sizes << "sizes:";
  for (int v : stats.values) sizes << " " << v;
  sizes << "\nmin " << stats.min << "\nq1 " << stats.q1 << "\nmedian "
        << stats.median << "\nq3 " << stats.q3 << "\nmax " << stats.max
        << "\n";
  write_text(fs::path(opt.outdir) / "sizes.txt", sizes.str());
  std::vector<std::string> artifacts = {"sizes.txt"};

  // simplified trees and per-tree essential-seed counts
  fs::create_directories(fs::path(opt.outdir) / "simplified");
  std::vector<int> seeds_used;
  for (size_t i = 0; i < trees.size(); ++i) {
    GpTree s = simplify(trees[i]);
    std::string stem = "simplified/run_" + two_digits(static_cast<int>(i));
    write_text(fs::path(opt.outdir) / (stem + ".tree"),
               serialize_tree(s) + "\n");
    artifacts.push_back(stem + ".tree");
    EssentialSet ess = essential_terminals(abstractize(trees[i], opt.s, opt.k));
    seeds_used.push_back(ess.seeds_used());
  }
  int max_seeds_used =
      trees.empty() ? 0
                    : *std::max_element(seeds_used.begin(), seeds_used.end());

  json classes_json;
  classes_json["per_tree_seeds_used"] = seeds_used;
  classes_json["seeds_used"] = max_seeds_used;

  std::ostringstream txt;
  if (trees.size() >= 2) {
    EquivalenceGraph graph =
        equivalence_graph(trees, opt.s, opt.k, opt.relation);
    std::ostringstream grid;
    for (int i = 0; i < graph.nodes; ++i) {
      for (int j = 0; j < graph.nodes; ++j)
        grid << (graph.adjacency[i][j] ? '1' : '0');
      grid << "\n";
    }
    write_text(fs::path(opt.outdir) / "adjacency.txt", grid.str());
    artifacts.push_back("adjacency.txt");
    classes_json["num_classes"] = graph.num_classes();
    classes_json["max_class_size"] = graph.max_class_size();
    classes_json["classes"] = graph.classes;
    txt << "#classes " << graph.num_classes() << "\nmax_size "
        << graph.max_class_size() << "\nseeds_used " << max_seeds_used << "\n";
  } else {
    txt << "single tree: size statistics only, no equivalence graph\n";
  }
  write_json(fs::path(opt.outdir) / "classes.json", classes_json);
  artifacts.push_back("classes.json");
  write_text(fs::path(opt.outdir) / "summary.txt", txt.str());
  artifacts.push_back("summary.txt");

  // simplest-tree pick: small (below the lower quartile), IF at the root,
  // condition a single literal
  std::ostringstream simplest;
  int pick = -1;
  for (size_t i = 0; i < trees.size(); ++i) {
    const GpNode& root = trees[i].root();
    if (trees[i].size() > stats.q1) continue;
    if (root.op != Op::If) continue;
    if (root.kids[0]->op != Op::Var && root.kids[0]->op != Op::Seed) continue;
    if (pick < 0 || trees[i].size() < trees[pick].size())
      pick = static_cast<int>(i);
  }
  if (pick >= 0)
    simplest << "run " << pick << " size " << trees[pick].size() << ": "
             << serialize_tree(trees[pick]) << "\n";
  else
    simplest << "no tree matches the simplicity criteria\n";
  write_text(fs::path(opt.outdir) / "simplest.txt", simplest.str());
  artifacts.push_back("simplest.txt");

  json options;
  options["tree_dir"] = opt.tree_dir;
  options["s"] = opt.s;
  options["k"] = opt.k;
  options["scope"] =
      opt.relation.scope == EquivRelation::Scope::Joint ? "joint" : "kind";
  options["output_negation"] = opt.relation.output_negation;
  options["input_negation"] = opt.relation.input_negation;
  write_manifest(opt.outdir, "analyze", options, artifacts);

  std::cout << txt.str();
  return 0;
}

// ---------------------------------------------------------------------------
// bootstrap

int cmd_bootstrap(const BootstrapOptions& opt) {
  if (opt.outdir.empty()) throw UsageError("bootstrap needs an output dir");
  TerminalContext parse_ctx;
  parse_ctx.k = opt.k;
  parse_ctx.s = 16;
  std::ifstream is(opt.tree_path);
  if (!is) throw UsageError("cannot read tree file " + opt.tree_path);
  std::string line;
  std::getline(is, line);
  GpTree tree = parse_tree(line, parse_ctx);

  std::vector<SeedGroup> base = load_seed_groups(opt.seed_dir);
  BootstrapResult result = bootstrap(tree, opt.k, base, opt.levels);

  std::vector<std::string> artifacts = {"report.json", "report.txt"};
  for (size_t lvl = 0; lvl < result.levels.size(); ++lvl) {
    std::string dir = "level_" + two_digits(static_cast<int>(lvl) + 1);
    save_seed_groups((fs::path(opt.outdir) / dir).string(),
                     result.levels[lvl].groups);
    artifacts.push_back(dir);
  }

  // one column per produced size, Table-style three rows
  std::ostringstream txt;
  txt << "size        ";
  for (const auto& lvl : result.levels) txt << "\t" << lvl.n;
  txt << "\nseed NL     ";
  int feeding = base[0].declared_nl;
  for (const auto& lvl : result.levels) {
    txt << "\t" << feeding;
    feeding = lvl.groups[0].declared_nl;
  }
  txt << "\nresulting NL";
  for (const auto& lvl : result.levels)
    txt << "\t" << lvl.groups[0].declared_nl;
  txt << "\n";
  if (!result.completed)
    txt << "halted after level " << result.levels.size() << ": "
        << result.diagnostic << "\n";
  std::cout << txt.str();
  write_text(fs::path(opt.outdir) / "report.txt", txt.str());

  json j;
  j["tree"] = serialize_tree(tree);
  j["completed"] = result.completed;
  j["diagnostic"] = result.diagnostic;
  json rows = json::array();
  for (const auto& lvl : result.levels) {
    json r;
    r["size"] = lvl.n;
    r["nl"] = lvl.groups[0].declared_nl;
    r["groups"] = lvl.groups.size();
    rows.push_back(r);
  }
  j["levels"] = rows;
  write_json(fs::path(opt.outdir) / "report.json", j);

  json options;
  options["tree_path"] = opt.tree_path;
  options["seed_dir"] = opt.seed_dir;
  options["k"] = opt.k;
  options["levels"] = opt.levels;
  write_manifest(opt.outdir, "bootstrap", options, artifacts);
  return result.completed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// report / rerun

int cmd_report(const std::string& dir) {
  bool found = false;
  for (const char* name : {"manifest.json", "summary.json", "report.json",
                           "classes.json"}) {
    fs::path p = fs::path(dir) / name;
    if (!fs::exists(p)) continue;
    found = true;
    std::cout << "== " << name << "\n" << read_json(p).dump(2) << "\n";
  }
  for (const char* name : {"summary.txt", "report.txt"}) {
    fs::path p = fs::path(dir) / name;
    if (!fs::exists(p)) continue;
    found = true;
    std::ifstream is(p);
    std::cout << "== " << name << "\n" << is.rdbuf() << "\n";
  }
  if (!found) {
    std::cerr << "no run artifacts under " << dir << "\n";
    return 2;
  }
  return 0;
}

int cmd_rerun(const std::string& manifest_path, const std::string& outdir) {
  json m = read_json(manifest_path);
  std::string command = m.at("command").get<std::string>();
  const json& o = m.at("options");
  if (command == "evolve-fn") {
    EvolveFnOptions opt;
    opt.n = o.at("n").get<int>();
    opt.target_nl = o.at("target_nl").get<int>();
    opt.obj = o.at("objective").get<int>() == 1 ? ObjectiveKind::NlOnly
                                                : ObjectiveKind::NlWithSpectrum;
    opt.population = o.at("population").get<int>();
    opt.max_depth = o.at("max_depth").get<int>();
    opt.mutation_prob = o.at("mutation_prob").get<double>();
    opt.budget = o.at("budget").get<long long>();
    opt.runs = o.at("runs").get<int>();
    opt.rng_seed = o.at("rng_seed").get<uint64_t>();
    opt.jobs = o.at("jobs").get<int>();
    opt.outdir = outdir;
    return cmd_evolve_fn(opt);
  }
  if (command == "evolve-cons") {
    EvolveConsOptions opt;
    opt.config = experiment_from_json(o.at("config"));
    opt.seed_dir = o.at("seed_dir").get<std::string>();
    opt.jobs = o.at("jobs").get<int>();
    opt.outdir = outdir;
    return cmd_evolve_cons(opt);
  }
  if (command == "test-cons") {
    TestConsOptions opt;
    opt.tree_path = o.at("tree_path").get<std::string>();
    opt.testset_dir = o.at("testset_dir").get<std::string>();
    opt.k = o.at("k").get<int>();
    opt.target_mode = o.at("target_mode").get<std::string>();
    for (auto& [key, value] : o.at("target_overrides").items())
      opt.target_overrides[std::stoi(key)] = value.get<int>();
    opt.outdir = outdir;
    return cmd_test_cons(opt);
  }
  if (command == "analyze") {
    AnalyzeOptions opt;
    opt.tree_dir = o.at("tree_dir").get<std::string>();
    opt.s = o.at("s").get<int>();
    opt.k = o.at("k").get<int>();
    opt.relation.scope = o.at("scope").get<std::string>() == "joint"
                             ? EquivRelation::Scope::Joint
                             : EquivRelation::Scope::WithinKind;
    opt.relation.output_negation = o.at("output_negation").get<bool>();
    opt.relation.input_negation = o.at("input_negation").get<bool>();
    opt.outdir = outdir;
    return cmd_analyze(opt);
  }
  if (command == "bootstrap") {
    BootstrapOptions opt;
    opt.tree_path = o.at("tree_path").get<std::string>();
    opt.seed_dir = o.at("seed_dir").get<std::string>();
    opt.k = o.at("k").get<int>();
    opt.levels = o.at("levels").get<int>();
    opt.outdir = outdir;
    return cmd_bootstrap(opt);
  }
  throw UsageError("manifest holds unknown command \"" + command + "\"");
}

}  // namespace bfgp
