#include "commands.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "meancx/error.hpp"
#include "meancx/parallel.hpp"
#include "meancx/report.hpp"
#include "meancx/systems.hpp"
#include "run_config.hpp"

namespace meancx::cli {

namespace {

using nlohmann::json;

struct Emitted {
  json report;
  std::string csv;
};

// Flag values land here; only options the user actually passed override the config file.
struct Flags {
  std::string config_path;
  RunConfig values;
  std::string seed;
};

std::string slug(std::string_view text) {
  std::string out;
  for (char c : text) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw std::invalid_argument("seed must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

SystemPtr build_system(const RunConfig& config) {
  SystemPtr system = make_system(config.address());
  if (!config.ground_truth.empty()) system = relabel(system, parse_ground_truth(config.ground_truth));
  return system;
}

std::string family_for(const RunConfig& config, const GroupSpec& group) {
  return config.family.empty() ? default_family(group) : config.family;
}

std::string join_csv(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      out += parts[i];
    } else {
      out += parts[i].substr(parts[i].find('\n') + 1);
    }
  }
  return out;
}

Emitted cmd_profile(const RunConfig& c) {
  const auto system = build_system(c);
  const auto family = family_for(c, system->group());
  const auto profiles = folner_profiles(*system, family, c.epsilons, c.ns, c.sample_size, *c.seed, c.rule());
  Emitted e;
  e.report = json::array();
  std::vector<std::string> parts;
  for (const auto& p : profiles) {
    e.report.push_back(to_json(p));
    parts.push_back(to_csv(p));
  }
  e.csv = join_csv(parts);
  return e;
}

Emitted cmd_tempered(const RunConfig& c) {
  const GroupSpec group = GroupSpec::parse(c.group);
  const auto family = family_for(c, group);
  const auto result = shulman_constant(group, family, c.index);
  json j = to_json(result);
  j["group"] = group.name();
  j["family"] = family;
  j["index"] = c.index;
  return {j, to_csv(result)};
}

Emitted cmd_maxmean(const RunConfig& c) {
  const auto system = build_system(c);
  const auto result = max_mean_search(*system, c.epsilons.front(), c.budget, c.sample_size, *c.seed, c.rule());
  return {to_json(result), to_csv(result)};
}

Emitted cmd_spectrum(const RunConfig& c) {
  const auto system = build_system(c);
  const auto family = family_for(c, system->group());
  const auto reports =
      orbit_net_profiles(*system, family, c.epsilons.front(), c.ns, c.sample_size, *c.seed, c.rule());
  json nets = json::array();
  for (const auto& r : reports) nets.push_back(to_json(r));
  const json j = {{"system", system->spec_string()},
                  {"nets", nets},
                  {"verdict", to_string(combine(reports))},
                  {"scope", "precompactness is tested for the built-in test functions only"}};
  return {j, to_csv(reports)};
}

Emitted cmd_equicont(const RunConfig& c) {
  const auto system = build_system(c);
  const auto family = family_for(c, system->group());
  std::vector<EquicontinuityMode> modes;
  if (c.mode != "in-mean") modes.push_back(EquicontinuityMode::MeanLimsup);
  if (c.mode != "limsup") modes.push_back(EquicontinuityMode::InTheMean);
  Emitted e;
  e.report = json::array();
  std::vector<std::string> parts;
  for (auto mode : modes) {
    const auto report = equicontinuity_test(*system, family, c.epsilons, c.sample_size, c.n_max, *c.seed, mode);
    e.report.push_back(to_json(report));
    parts.push_back(to_csv(report));
  }
  e.csv = join_csv(parts);
  return e;
}

Emitted cmd_cross_validate(const RunConfig& c, ConsistencyStatus& status) {
  const auto system = build_system(c);
  CrossValidationConfig config = default_cross_validation_config(*system);
  if (!c.family.empty()) config.families = {c.family};
  config.rule = c.rule();
  config.maxmean_budget = c.budget;
  const auto report = cross_validate(*system, config, *c.seed);
  status = report.status;
  return {to_json(report), to_csv(report)};
}

std::string list_systems_table() {
  const auto rows = list_systems();
  std::size_t width = 7;
  for (const auto& r : rows) width = std::max(width, r.address.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width) + 2) << "address" << std::setw(14) << "group"
     << std::setw(22) << "ground-truth"
     << "isometric\n";
  for (const auto& r : rows) {
    os << std::setw(static_cast<int>(width) + 2) << r.address << std::setw(14) << r.group << std::setw(22)
       << to_string(r.truth) << (r.isometric ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::filesystem::path output_path(const RunConfig& c, const std::string& command) {
  if (!c.output.empty()) return c.output;
  const char* dir = std::getenv("MEANCX_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  std::string subject = command == "tempered" ? c.group : c.system;
  std::string name = command + "-" + slug(subject);
  if (c.seed) name += "-seed" + std::to_string(*c.seed);
  return std::filesystem::path(dir) / (name + "." + c.format);
}

void add_common(CLI::App* sub, Flags& f, bool system_options) {
  sub->add_option("--config", f.config_path, "JSON config file; flags override its values");
  sub->add_option("--seed", f.seed, "Seed for all randomness (required for randomized commands)");
  sub->add_option("--output,-o", f.values.output, "Report path (default: stdout or $MEANCX_OUTPUT_DIR)");
  sub->add_option("--format", f.values.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", f.values.threads, "Worker threads (0 = all cores)");
  if (!system_options) return;
  sub->add_option("--system,-s", f.values.system, "System address, e.g. rotation:alpha=0.3 or bernoulli-shift:Z^2");
  sub->add_option("--family,-f", f.values.family, "Folner family (default: the group's default)");
  sub->add_option("--epsilon,-e", f.values.epsilons, "Scale(s) in (0,1)")->delimiter(',');
  sub->add_option("--n", f.values.ns, "Window indices, strictly increasing")->delimiter(',');
  sub->add_option("--sample,-N", f.values.sample_size, "Sample size");
  sub->add_option("--theta", f.values.theta, "Bounded if last <= theta * middle");
  sub->add_option("--stability", f.values.stability, "Allowed spread of the last three entries");
  sub->add_option("--truncation,-L", f.values.truncation, "Truncation radius for symbolic systems (0 = default)");
  sub->add_option("--ground-truth", f.values.ground_truth,
                  "Override the ground-truth label: DiscreteSpectrum, NotDiscreteSpectrum or Unknown");
}

// Applies the config file, then every flag the user passed on top of it.
RunConfig resolve(const CLI::App* sub, const Flags& f) {
  RunConfig c = f.config_path.empty() ? RunConfig{} : load_config(f.config_path);
  auto given = [sub](const char* name) {
    try {
      return sub->get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  const RunConfig& v = f.values;
  if (given("--system")) c.system = v.system;
  if (given("--family")) c.family = v.family;
  if (given("--epsilon")) c.epsilons = v.epsilons;
  if (given("--n")) c.ns = v.ns;
  if (given("--sample")) c.sample_size = v.sample_size;
  if (given("--output")) c.output = v.output;
  if (given("--format")) c.format = v.format;
  if (given("--theta")) c.theta = v.theta;
  if (given("--stability")) c.stability = v.stability;
  if (given("--truncation")) c.truncation = v.truncation;
  if (given("--budget")) c.budget = v.budget;
  if (given("--nmax")) c.n_max = v.n_max;
  if (given("--mode")) c.mode = v.mode;
  if (given("--ground-truth")) c.ground_truth = v.ground_truth;
  if (given("--group")) c.group = v.group;
  if (given("--index")) c.index = v.index;
  if (given("--threads")) c.threads = v.threads;
  if (given("--seed")) c.seed = parse_seed(f.seed);
  c.validate();
  return c;
}

void write_report(const RunConfig& c, const std::string& command, const Emitted& emitted, std::ostream& out) {
  std::string text;
  if (c.format == "json") {
    json envelope = {{"tool", "meancx"},
                     {"version", version()},
                     {"command", command},
                     {"config", to_json(c)},
                     {"report", emitted.report}};
    text = envelope.dump(2) + "\n";
  } else {
    text = "# meancx " + version() + " " + command + "\n# config " + to_json(c).dump() + "\n" + emitted.csv;
  }
  const auto path = output_path(c, command);
  if (path.empty()) {
    out << text;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write report to '" + path.string() + "'");
  file << text;
  out << "wrote " << path.string() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean-complexity and discrete-spectrum diagnostics for group actions", "meancx"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  Flags f;
  auto* list = app.add_subcommand("list-systems", "List built-in systems with group, label and isometry flag");
  auto* profile = app.add_subcommand("profile", "Covering-number profile along a Folner sequence");
  auto* tempered = app.add_subcommand("tempered", "Shulman constant of a Folner family by enumeration");
  auto* maxmean = app.add_subcommand("maxmean", "Max-mean complexity search over candidate sets");
  auto* spectrum = app.add_subcommand("spectrum", "L2 orbit-net profiles of the built-in test functions");
  auto* equicont = app.add_subcommand("equicont", "Mean-equicontinuity and equicontinuity-in-the-mean tests");
  auto* cross = app.add_subcommand("cross-validate", "Run every diagnostic and check agreement with the label");

  for (auto* sub : {profile, maxmean, spectrum, equicont, cross}) add_common(sub, f, true);
  add_common(tempered, f, false);
  tempered->add_option("--group,-g", f.values.group, "Group: Z, Z^2, heis3, lamplighter, R");
  tempered->add_option("--family,-f", f.values.family, "Folner family (default: the group's default)");
  tempered->add_option("--index,-n", f.values.index, "Largest window index N");
  for (auto* sub : {maxmean, cross}) sub->add_option("--budget", f.values.budget, "Number of candidate sets");
  equicont->add_option("--nmax", f.values.n_max, "Largest window index");
  equicont->add_option("--mode", f.values.mode, "limsup, in-mean or both")
      ->check(CLI::IsMember({"limsup", "in-mean", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      out << list_systems_table();
      return kExitOk;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const RunConfig config = resolve(sub, f);
    set_thread_count(config.threads);
    if (command != "tempered" && !config.seed) {
      throw std::invalid_argument("--seed is required: all randomness is derived from it");
    }
    ConsistencyStatus status = ConsistencyStatus::Consistent;
    Emitted emitted;
    if (command == "profile") {
      emitted = cmd_profile(config);
    } else if (command == "tempered") {
      emitted = cmd_tempered(config);
    } else if (command == "maxmean") {
      emitted = cmd_maxmean(config);
    } else if (command == "spectrum") {
      emitted = cmd_spectrum(config);
    } else if (command == "equicont") {
      emitted = cmd_equicont(config);
    } else {
      emitted = cmd_cross_validate(config, status);
    }
    write_report(config, command, emitted, out);
    if (status == ConsistencyStatus::Inconsistent) {
      err << "inconsistent: " << emitted.report.value("notes", std::string()) << "\n";
      return kExitInconsistent;
    }
    return kExitOk;
  } catch (const SampleSizeError& e) {
    err << "error: " << e.what() << " (need N >= " << e.required() << ")\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: bad config value: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace meancx::cli
