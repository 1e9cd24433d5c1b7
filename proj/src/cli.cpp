// Copyright 2026 The knapmech Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "knapmech/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "knapmech/catalog.hpp"
#include "knapmech/certificates.hpp"
#include "knapmech/gamelab.hpp"
#include "knapmech/instance_io.hpp"
#include "knapmech/knapsack.hpp"
#include "knapmech/mechanisms.hpp"
#include "knapmech/program.hpp"

namespace knapmech {

namespace {

// Line-delimited machine-readable records. Values never contain spaces, so
// a record is a flat list of key=value tokens.
class RecordSink {
 public:
  void open(const std::string& path) {
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::invalid_argument("cannot open records file: " + path);
    enabled_ = true;
  }

  void write(const std::vector<std::pair<std::string, std::string>>& fields) {
    if (!enabled_) return;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) file_ << ' ';
      file_ << fields[i].first << '=' << fields[i].second;
    }
    file_ << '\n';
  }

 private:
  std::ofstream file_;
  bool enabled_ = false;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

// "{a,c}:1/2;{d}:1/2": atom separator without spaces, for records.
std::string compact_distribution(const OutcomeDistribution& dist) {
  std::string out;
  for (std::size_t i = 0; i < dist.atoms().size(); ++i) {
    if (i > 0) out += ";";
    out += dist.atoms()[i].first.id_list() + ":" + dist.atoms()[i].second.str();
  }
  return out;
}

std::string compact_profile(const ReportProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += "|";
    out += profile[i].id_list();
  }
  return out;
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return Rational::from_string(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

MechanismId resolve_mechanism(const std::string& name, const std::string& alpha) {
  const auto kind = mechanism_kind_from_string(name);
  if (!kind) throw std::invalid_argument("unknown mechanism '" + name + "'");
  if (!alpha.empty()) return MechanismId::of(*kind, rational_arg(alpha, "--alpha"));
  return MechanismId::of(*kind);
}

std::vector<Rational> truthful_sizes(const KqusInstance& instance) {
  std::vector<Rational> sizes;
  for (const KqusAgent& agent : instance.agents) sizes.push_back(agent.size);
  return sizes;
}

ItemSet kqus_true_items(const KqusInstance& instance) {
  return profile_union(kqus_reports(instance, truthful_sizes(instance)));
}

void print_opt(const OptResult& opt, std::ostream& out, RecordSink& records) {
  out << "opt " << opt.chosen.id_list() << "\n";
  out << "value " << opt.value.str() << "\n";
  out << "size " << opt.size.str() << "\n";
  records.write({{"record", "solve"},
                 {"set", opt.chosen.id_list()},
                 {"value", opt.value.str()},
                 {"size", opt.size.str()}});
}

int do_solve(const std::string& path, std::ostream& out, RecordSink& records) {
  const ParsedInstance parsed = load_instance(path);
  if (const auto* set_instance = std::get_if<Instance>(&parsed)) {
    print_opt(opt_knapsack(set_instance->union_all(), set_instance->capacity), out, records);
  } else {
    const auto& kqus = std::get<KqusInstance>(parsed);
    print_opt(opt_knapsack(kqus_true_items(kqus), Rational(1)), out, records);
  }
  return 0;
}

void sample_outcomes(const OutcomeDistribution& dist, long count, std::uint64_t seed,
                     std::ostream& out) {
  std::mt19937_64 rng(seed);
  const mpz_class denom = mpz_class(1) << 64;
  std::vector<long> hits(dist.atoms().size(), 0);
  for (long n = 0; n < count; ++n) {
    const Rational u(mpz_class(rng()), denom);
    Rational acc;
    for (std::size_t i = 0; i < dist.atoms().size(); ++i) {
      acc = acc + dist.atoms()[i].second;
      if (u < acc) {
        ++hits[i];
        break;
      }
    }
  }
  out << "sampled " << count << " with seed " << seed << " (non-authoritative):";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    out << (i > 0 ? ", " : " ") << dist.atoms()[i].first.id_list() << " x" << hits[i];
  }
  out << "\n";
}

int do_run(const std::string& name, const std::string& path, const std::string& alpha,
           long sample, std::uint64_t seed, std::ostream& out, RecordSink& records) {
  const MechanismId id = resolve_mechanism(name, alpha);
  const ParsedInstance parsed = load_instance(path);

  OutcomeDistribution dist;
  std::vector<Rational> utilities;
  if (const auto* set_instance = std::get_if<Instance>(&parsed)) {
    dist = make_mechanism(id)(set_instance->truthful_reports(), set_instance->capacity);
    for (const ItemSet& x : set_instance->true_sets) {
      utilities.push_back(expected_utility(x, dist));
    }
  } else {
    if (!is_kqus_mechanism(id.kind)) {
      throw std::invalid_argument("mechanism " + name + " needs a set-model instance file");
    }
    const auto& kqus = std::get<KqusInstance>(parsed);
    dist = make_kqus_mechanism(id.kind)(kqus, truthful_sizes(kqus));
    for (std::size_t i = 0; i < kqus.agents.size(); ++i) {
      utilities.push_back(kqus_expected_utility(kqus, static_cast<int>(i), dist));
    }
  }

  Rational welfare;
  for (const Rational& u : utilities) welfare = welfare + u;
  out << "mechanism " << name << "\n";
  out << "outcome " << dist.str() << "\n";
  std::vector<std::pair<std::string, std::string>> fields = {
      {"record", "run"}, {"mechanism", name}, {"outcome", compact_distribution(dist)}};
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    out << "utility " << i + 1 << " " << utilities[i].str() << "\n";
    fields.emplace_back("u" + std::to_string(i + 1), utilities[i].str());
  }
  out << "welfare " << welfare.str() << "\n";
  fields.emplace_back("welfare", welfare.str());
  records.write(fields);
  if (sample > 0) sample_outcomes(dist, sample, seed, out);
  return 0;
}

int do_ratio(const std::string& name, const std::string& path, const std::string& alpha,
             std::ostream& out, RecordSink& records) {
  const MechanismId id = resolve_mechanism(name, alpha);
  const ParsedInstance parsed = load_instance(path);

  Rational opt;
  Rational welfare;
  if (const auto* set_instance = std::get_if<Instance>(&parsed)) {
    opt = opt_knapsack(set_instance->union_all(), set_instance->capacity).value;
    welfare = expected_welfare(*set_instance, make_mechanism(id)(set_instance->truthful_reports(),
                                                                 set_instance->capacity));
  } else {
    if (!is_kqus_mechanism(id.kind)) {
      throw std::invalid_argument("mechanism " + name + " needs a set-model instance file");
    }
    const auto& kqus = std::get<KqusInstance>(parsed);
    opt = kqus_opt_value(kqus);
    welfare =
        kqus_expected_welfare(kqus, make_kqus_mechanism(id.kind)(kqus, truthful_sizes(kqus)));
  }
  if (opt.is_zero()) throw std::invalid_argument("ratio: optimal welfare is zero");
  const RatioValue ratio = ratio_of(opt, welfare);
  out << "mechanism " << name << "\n";
  out << "opt " << opt.str() << "\n";
  out << "welfare " << welfare.str() << "\n";
  out << "ratio " << ratio.str() << "\n";
  records.write({{"record", "ratio"},
                 {"mechanism", name},
                 {"opt", opt.str()},
                 {"welfare", welfare.str()},
                 {"ratio", ratio.str()}});
  return 0;
}

std::vector<Rational> rational_list(const std::string& csv, const std::string& flag) {
  std::vector<Rational> values;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(rational_arg(token, flag));
  if (values.empty()) throw std::invalid_argument(flag + ": empty list");
  return values;
}

int do_audit_set(const MechanismId& id, Instance instance, const std::string& name,
                 const std::string& model_override, const PoolConfig& pool, std::ostream& out,
                 RecordSink& records) {
  if (!model_override.empty()) {
    const auto model = report_model_from_string(model_override);
    if (!model) throw std::invalid_argument("unknown report model '" + model_override + "'");
    for (auto& m : instance.models) m = *model;
  }
  const AuditVerdict verdict = audit_strategyproofness(make_mechanism(id), instance, pool);
  out << "mechanism " << name << "\n";
  out << "exhaustive " << bool_str(verdict.exhaustive) << "\n";
  out << "deviations " << verdict.deviations_checked << "\n";
  std::vector<std::pair<std::string, std::string>> fields = {
      {"record", "audit"},
      {"mechanism", name},
      {"exhaustive", bool_str(verdict.exhaustive)},
      {"deviations", std::to_string(verdict.deviations_checked)},
      {"violation", bool_str(verdict.violation)}};
  if (verdict.violation) {
    const AuditWitness& w = *verdict.witness;
    out << "violation agent " << w.agent << " gain " << w.gain.str() << "\n";
    out << "  deviation " << w.deviation.id_list() << "\n";
    const ItemSet& truth = instance.true_sets[static_cast<std::size_t>(w.agent - 1)];
    for (const Item& item : w.deviation.items()) {
      if (!truth.contains(item.id)) {
        out << "  fake " << item.id << " value " << item.value.str() << " size "
            << item.size.str() << "\n";
      }
    }
    out << "  truthful-utility " << w.truthful_utility.str() << "\n";
    out << "  deviating-utility " << w.deviating_utility.str() << "\n";
    fields.insert(fields.end(), {{"agent", std::to_string(w.agent)},
                                 {"deviation", w.deviation.id_list()},
                                 {"truthful", w.truthful_utility.str()},
                                 {"deviating", w.deviating_utility.str()},
                                 {"gain", w.gain.str()}});
  } else {
    out << "no violation found\n";
  }
  records.write(fields);
  return verdict.violation ? 3 : 0;
}

int do_audit_kqus(MechanismKind kind, const KqusInstance& instance, const std::string& name,
                  int grid, std::ostream& out, RecordSink& records) {
  KqusAuditConfig config;
  config.grid_denominator = grid;
  const KqusAuditVerdict verdict = audit_kqus(kind, instance, config);
  out << "mechanism " << name << "\n";
  out << "grid " << grid << "\n";
  out << "deviations " << verdict.deviations_checked << "\n";
  std::vector<std::pair<std::string, std::string>> fields = {
      {"record", "audit"},
      {"mechanism", name},
      {"grid", std::to_string(grid)},
      {"deviations", std::to_string(verdict.deviations_checked)},
      {"violation", bool_str(verdict.violation)}};
  if (verdict.violation) {
    const KqusAuditWitness& w = *verdict.witness;
    out << "violation agent " << w.agent << " gain " << w.gain.str() << "\n";
    out << "  reported-size " << w.reported_size.str() << "\n";
    out << "  truthful-utility " << w.truthful_utility.str() << "\n";
    out << "  deviating-utility " << w.deviating_utility.str() << "\n";
    fields.insert(fields.end(), {{"agent", std::to_string(w.agent)},
                                 {"size", w.reported_size.str()},
                                 {"truthful", w.truthful_utility.str()},
                                 {"deviating", w.deviating_utility.str()},
                                 {"gain", w.gain.str()}});
  } else {
    out << "no violation found\n";
  }
  records.write(fields);
  return verdict.violation ? 3 : 0;
}

int do_nash(const std::string& name, const std::string& path, const std::string& alpha,
            long max_profiles, std::ostream& out, RecordSink& records) {
  const MechanismId id = resolve_mechanism(name, alpha);
  const ParsedInstance parsed = load_instance(path);
  const auto* instance = std::get_if<Instance>(&parsed);
  if (instance == nullptr) {
    throw std::invalid_argument("nash needs a set-model instance file");
  }
  NashLimits limits;
  if (max_profiles > 0) limits.max_profiles = max_profiles;
  const NashReport report = enumerate_pure_nash(make_mechanism(id), *instance, {}, limits);
  out << "mechanism " << name << "\n";
  out << "profiles " << report.profiles_checked << "\n";
  out << "exhaustive " << bool_str(report.exhaustive) << "\n";
  out << "opt " << report.opt_welfare.str() << "\n";
  for (const NashEquilibrium& eq : report.equilibria) {
    out << "equilibrium";
    for (const ItemSet& set : eq.profile) out << " " << set.id_list();
    out << " welfare " << eq.welfare.str() << " ratio " << eq.ratio.str() << "\n";
  }
  out << "equilibria " << report.equilibria.size() << "\n";
  out << "truthful-equilibrium " << bool_str(report.truthful_is_equilibrium) << "\n";
  if (report.worst_ratio) out << "worst-ratio " << report.worst_ratio->str() << "\n";
  records.write({{"record", "nash"},
                 {"mechanism", name},
                 {"profiles", std::to_string(report.profiles_checked)},
                 {"exhaustive", bool_str(report.exhaustive)},
                 {"opt", report.opt_welfare.str()},
                 {"equilibria", std::to_string(report.equilibria.size())},
                 {"truthful", bool_str(report.truthful_is_equilibrium)},
                 {"worst_ratio", report.worst_ratio ? report.worst_ratio->str() : "none"}});
  for (std::size_t i = 0; i < report.equilibria.size(); ++i) {
    const NashEquilibrium& eq = report.equilibria[i];
    records.write({{"record", "nash-equilibrium"},
                   {"index", std::to_string(i)},
                   {"profile", compact_profile(eq.profile)},
                   {"welfare", eq.welfare.str()},
                   {"ratio", eq.ratio.str()}});
  }
  return 0;
}

int do_certify(const std::string& family_name, const std::map<std::string, Rational>& params,
               bool expect_infeasible, bool show_instances, std::ostream& out,
               RecordSink& records) {
  const auto family = certificate_family_from_string(family_name);
  if (!family) throw std::invalid_argument("unknown certificate family '" + family_name + "'");
  const Certificate cert = eval_certificate(*family, params);
  out << "family " << family_name << "\n";
  std::vector<std::pair<std::string, std::string>> fields = {{"record", "certificate"},
                                                             {"family", family_name}};
  for (const auto& [key, value] : cert.parameters) {
    out << key << " " << value << "\n";
    fields.emplace_back(key, value);
  }
  for (const auto& [key, value] : cert.bounds) {
    out << key << " " << value << "\n";
    fields.emplace_back(key, value);
  }
  if (cert.infeasible) {
    out << "Infeasible, margin " << cert.margin->str() << "\n";
    fields.emplace_back("verdict", "Infeasible");
    fields.emplace_back("margin", cert.margin->str());
  } else {
    out << "Feasible\n";
    fields.emplace_back("verdict", "Feasible");
  }
  if (!cert.instance_note.empty()) out << "note " << cert.instance_note << "\n";
  if (show_instances) {
    if (cert.instances) {
      out << "instance X:\n" << serialize_instance(cert.instances->first);
      out << "instance X':\n" << serialize_instance(cert.instances->second);
    }
    if (cert.kqus_instances) {
      out << "instance X:\n" << serialize_instance(cert.kqus_instances->first);
      out << "instance X':\n" << serialize_instance(cert.kqus_instances->second);
    }
  }
  records.write(fields);
  return cert.infeasible || !expect_infeasible ? 0 : 4;
}

int do_reduce(const std::string& path, const Rational& k, std::ostream& out,
              RecordSink& records) {
  const ParsedInstance parsed = load_instance(path);
  const auto* instance = std::get_if<Instance>(&parsed);
  if (instance == nullptr) {
    throw std::invalid_argument("reduce needs a set-model instance file");
  }
  // The reduction wants the knapsack scaled to capacity 1/2; sizes are at
  // most the capacity, so the scaled sizes are at most 1/2 automatically.
  const Rational scale = Rational(1, 2) / instance->capacity;
  const ItemSet pooled = instance->union_all();
  std::vector<Item> scaled;
  for (const Item& item : pooled.items()) {
    scaled.push_back({item.id, item.owner, item.value, item.size * scale});
  }
  const ReductionCheck check = run_reduction(ItemSet(std::move(scaled)), k);
  out << "k " << k.str() << "\n";
  out << "knapsack-opt " << check.knapsack_opt.str() << "\n";
  out << "opt-at-least-k " << bool_str(check.opt_at_least_k) << "\n";
  out << "program-objective " << check.program_objective.str() << "\n";
  out << "objective-is-2k " << bool_str(check.objective_is_2k) << "\n";
  out << "agree " << bool_str(check.agree) << "\n";
  records.write({{"record", "reduce"},
                 {"k", k.str()},
                 {"knapsack_opt", check.knapsack_opt.str()},
                 {"opt_at_least_k", bool_str(check.opt_at_least_k)},
                 {"program_objective", check.program_objective.str()},
                 {"objective_is_2k", bool_str(check.objective_is_2k)},
                 {"agree", bool_str(check.agree)}});
  return 0;
}

int do_catalog_list(std::ostream& out) {
  for (const CatalogEntry& entry : catalog_entries()) {
    out << entry.name;
    for (const CatalogParam& param : entry.params) {
      out << " [" << param.name << "=" << param.default_value.str() << ", " << param.domain
          << "]";
    }
    out << ": " << entry.summary << "\n";
  }
  return 0;
}

int do_catalog_build(const std::string& name, const std::vector<std::string>& raw_params,
                     const std::string& out_path, std::ostream& out) {
  std::map<std::string, Rational> params;
  for (const std::string& raw : raw_params) {
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--param expects key=value, got '" + raw + "'");
    }
    params[raw.substr(0, eq)] = rational_arg(raw.substr(eq + 1), "--param " + raw.substr(0, eq));
  }
  const std::string text = serialize_instance(catalog_build(name, params));
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact mechanisms, audits, and certificates for knapsack games"};
  app.name("knapmech");
  app.require_subcommand(1);

  std::string records_path;
  int jobs = 0;
  app.add_option("--records", records_path, "write machine-readable records to this file");
  app.add_option("--jobs", jobs, "worker thread count (0 keeps the runtime default)");

  auto* solve = app.add_subcommand("solve", "optimal solution of an instance file");
  std::string solve_file;
  solve->add_option("file", solve_file, "instance file")->required();

  auto* run = app.add_subcommand("run", "run a mechanism on truthful reports");
  std::string run_name, run_file, run_alpha;
  long run_sample = 0;
  std::uint64_t run_seed = 0;
  run->add_option("mechanism", run_name, "mechanism name")->required();
  run->add_option("file", run_file, "instance file")->required();
  run->add_option("--alpha", run_alpha, "guarantee parameter for the alpha mechanisms");
  run->add_option("--sample", run_sample, "also draw this many outcomes (demonstration only)");
  run->add_option("--seed", run_seed, "seed for --sample");

  auto* ratio = app.add_subcommand("ratio", "approximation ratio at truthful reports");
  std::string ratio_name, ratio_file, ratio_alpha;
  ratio->add_option("mechanism", ratio_name, "mechanism name")->required();
  ratio->add_option("file", ratio_file, "instance file")->required();
  ratio->add_option("--alpha", ratio_alpha, "guarantee parameter for the alpha mechanisms");

  auto* audit = app.add_subcommand("audit", "search unilateral deviations for a profitable lie");
  std::string audit_name, audit_file, audit_alpha, audit_model;
  std::string audit_fake_values, audit_fake_sizes;
  int audit_max_fakes = 2;
  int audit_grid = 20;
  audit->add_option("mechanism", audit_name, "mechanism name")->required();
  audit->add_option("file", audit_file, "instance file")->required();
  audit->add_option("--alpha", audit_alpha, "guarantee parameter for the alpha mechanisms");
  audit->add_option("--model", audit_model, "override every agent's report model");
  audit->add_option("--max-fakes", audit_max_fakes, "fabricated items per report (default 2)");
  audit->add_option("--fake-values", audit_fake_values, "comma-separated fake value pool");
  audit->add_option("--fake-sizes", audit_fake_sizes, "comma-separated fake size pool");
  audit->add_option("--grid", audit_grid, "size grid denominator for single-item audits");

  auto* nash = app.add_subcommand("nash", "enumerate pure Nash equilibria");
  std::string nash_name, nash_file, nash_alpha;
  long nash_max_profiles = 0;
  nash->add_option("mechanism", nash_name, "mechanism name")->required();
  nash->add_option("file", nash_file, "instance file")->required();
  nash->add_option("--alpha", nash_alpha, "guarantee parameter for the alpha mechanisms");
  nash->add_option("--max-profiles", nash_max_profiles, "profile enumeration cap");

  auto* certify = app.add_subcommand("certify", "evaluate a lower-bound certificate");
  std::string certify_family, certify_r, certify_t, certify_m, certify_eps;
  bool expect_infeasible = false;
  bool show_instances = false;
  certify->add_option("family", certify_family, "thm5, thm6, thm7, thm8, thm9 or thm10")
      ->required();
  certify->add_option("--r", certify_r, "claimed set-model approximation ratio");
  certify->add_option("--t", certify_t, "claimed single-item approximation ratio");
  certify->add_option("--M", certify_m, "scale parameter");
  certify->add_option("--eps", certify_eps, "construction epsilon");
  certify->add_flag("--expect-infeasible", expect_infeasible,
                    "exit 4 if the certificate comes back Feasible");
  certify->add_flag("--instances", show_instances, "print the construction's instance pair");

  auto* reduce = app.add_subcommand("reduce", "map a knapsack decision to the equalizing LP");
  std::string reduce_file, reduce_k;
  reduce->add_option("file", reduce_file, "instance file")->required();
  reduce->add_option("--k", reduce_k, "target knapsack value")->required();

  auto* catalog = app.add_subcommand("catalog", "named instances");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list entries");
  auto* catalog_build_cmd = catalog->add_subcommand("build", "build an entry");
  std::string catalog_name, catalog_out;
  std::vector<std::string> catalog_params;
  catalog_build_cmd->add_option("name", catalog_name, "entry name")->required();
  catalog_build_cmd->add_option("--param", catalog_params, "parameter as key=value");
  catalog_build_cmd->add_option("-o,--output", catalog_out, "write to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    RecordSink records;
    if (!records_path.empty()) records.open(records_path);

    if (app.got_subcommand(solve)) return do_solve(solve_file, out, records);
    if (app.got_subcommand(run)) {
      return do_run(run_name, run_file, run_alpha, run_sample, run_seed, out, records);
    }
    if (app.got_subcommand(ratio)) {
      return do_ratio(ratio_name, ratio_file, ratio_alpha, out, records);
    }
    if (app.got_subcommand(audit)) {
      const MechanismId id = resolve_mechanism(audit_name, audit_alpha);
      const ParsedInstance parsed = load_instance(audit_file);
      if (const auto* instance = std::get_if<Instance>(&parsed)) {
        PoolConfig pool;
        pool.max_fake_items = audit_max_fakes;
        if (!audit_fake_values.empty()) {
          pool.fake_values = rational_list(audit_fake_values, "--fake-values");
        }
        if (!audit_fake_sizes.empty()) {
          pool.fake_sizes = rational_list(audit_fake_sizes, "--fake-sizes");
        }
        return do_audit_set(id, *instance, audit_name, audit_model, pool, out, records);
      }
      if (!is_kqus_mechanism(id.kind)) {
        throw std::invalid_argument("mechanism " + audit_name +
                                    " needs a set-model instance file");
      }
      return do_audit_kqus(id.kind, std::get<KqusInstance>(parsed), audit_name, audit_grid, out,
                           records);
    }
    if (app.got_subcommand(nash)) {
      return do_nash(nash_name, nash_file, nash_alpha, nash_max_profiles, out, records);
    }
    if (app.got_subcommand(certify)) {
      std::map<std::string, Rational> params;
      if (!certify_r.empty()) params["r"] = rational_arg(certify_r, "--r");
      if (!certify_t.empty()) params["t"] = rational_arg(certify_t, "--t");
      if (!certify_m.empty()) params["M"] = rational_arg(certify_m, "--M");
      if (!certify_eps.empty()) params["eps"] = rational_arg(certify_eps, "--eps");
      return do_certify(certify_family, params, expect_infeasible, show_instances, out, records);
    }
    if (app.got_subcommand(reduce)) {
      return do_reduce(reduce_file, rational_arg(reduce_k, "--k"), out, records);
    }
    if (app.got_subcommand(catalog)) {
      if (catalog->got_subcommand(catalog_list)) return do_catalog_list(out);
      return do_catalog_build(catalog_name, catalog_params, catalog_out, out);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace knapmech
