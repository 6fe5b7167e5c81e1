#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "torelli/report.hpp"
#include "torelli/trivalent_graph.hpp"

namespace {

struct OptionRefs {
  CLI::Option* config = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* genus = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* graph_cap = nullptr;
  CLI::Option* chord_cap = nullptr;
  CLI::Option* colored_cap = nullptr;
};

struct Flags {
  std::string config_path;
  torelli::RunConfig values;  // raw flag values; merged over file/defaults
  std::string format_name = "json";
};

// defaults -> config file -> explicitly passed flags
torelli::RunConfig merge_config(const Flags& flags, const OptionRefs& refs) {
  torelli::RunConfig cfg;
  if (!flags.config_path.empty())
    cfg = torelli::RunConfig::from_file(flags.config_path);
  auto set_if = [](CLI::Option* opt, auto& dst, const auto& src) {
    if (opt && opt->count() > 0) dst = src;
  };
  set_if(refs.seed, cfg.seed, flags.values.seed);
  set_if(refs.trials, cfg.trials, flags.values.trials);
  set_if(refs.genus, cfg.genus, flags.values.genus);
  set_if(refs.threads, cfg.threads, flags.values.threads);
  set_if(refs.out, cfg.out, flags.values.out);
  set_if(refs.graph_cap, cfg.graph_cap, flags.values.graph_cap);
  set_if(refs.chord_cap, cfg.chord_cap, flags.values.chord_cap);
  set_if(refs.colored_cap, cfg.colored_cap, flags.values.colored_cap);
  if (refs.format && refs.format->count() > 0)
    cfg.format = torelli::parse_format(flags.format_name);
  cfg.validate();
  return cfg;
}

int emit(const torelli::Report& rep, const torelli::RunConfig& cfg) {
  std::string rendered = torelli::render_report(rep, cfg.format);
  if (cfg.out == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    out << rendered;
  }
  std::cerr << "suite " << rep.suite << " finished in " << rep.wall_seconds
            << "s\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for trivalent-graph spaces, invariant "
               "tensor contractions and group-ring identities"};
  app.require_subcommand(1);

  Flags flags;
  std::map<const CLI::App*, OptionRefs> refs_of;
  auto add_common = [&](CLI::App* cmd) -> OptionRefs& {
    OptionRefs refs;
    refs.config = cmd->add_option("--config", flags.config_path,
                                  "key = value config file");
    refs.seed = cmd->add_option("--seed", flags.values.seed, "PRNG seed");
    refs.trials = cmd->add_option("--trials", flags.values.trials,
                                  "trial count for random suites");
    refs.genus =
        cmd->add_option("--n", flags.values.genus, "genus of the symplectic "
                                                   "space");
    refs.threads =
        cmd->add_option("--threads", flags.values.threads, "worker pool size");
    refs.out = cmd->add_option("--out", flags.values.out,
                               "output path, '-' for stdout");
    refs.format =
        cmd->add_option("--format", flags.format_name, "json | csv | text");
    return refs_of.emplace(cmd, refs).first->second;
  };

  auto* dims = app.add_subcommand("dims", "chord-diagram counts and AS/IHX "
                                          "graph dimensions");
  {
    OptionRefs& r = add_common(dims);
    r.graph_cap =
        dims->add_option("--m", flags.values.graph_cap, "graph degree cap");
    r.chord_cap = dims->add_option("--chord-cap", flags.values.chord_cap,
                                   "chord diagram degree cap");
    r.colored_cap = dims->add_option(
        "--colored-cap", flags.values.colored_cap, "colored diagram cap");
  }

  auto* table = app.add_subcommand(
      "table219", "ranks of the six diagram-contraction invariant spaces");
  add_common(table);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  std::string verify_suite = "all";
  verify->add_option("--suite", verify_suite,
                     "all | lemma22 | lemma28 | eq20 | eq21 | gamma | "
                     "figure8 | lagrangian");

  auto* identities =
      app.add_subcommand("identities", "group-ring identity suites");
  auto* identities_run = identities->add_subcommand("run", "run one suite");
  add_common(identities_run);
  std::string id_suite;
  identities_run
      ->add_option("--suite", id_suite,
                   "lemma22 | lemma28 | eq20 | eq21 | gamma")
      ->required();

  auto* lagrangian = app.add_subcommand("lagrangian", "cup-form suites");
  auto* lagrangian_verify =
      lagrangian->add_subcommand("verify", "cup form distinguishes pairs");
  add_common(lagrangian_verify);

  auto* contract =
      app.add_subcommand("contract", "dump one contraction tensor");
  add_common(contract);
  std::string diagram_text;
  bool colored = false;
  contract->add_option("--diagram", diagram_text,
                       "diagram text, e.g. \"6: (1 4)(2 5)(3 6)\"")
      ->required();
  contract->add_flag("--colored", colored, "directed chords, GL contraction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const CLI::App* active = nullptr;
    for (const auto& [cmd, refs] : refs_of)
      if (cmd->parsed()) active = cmd;
    if (!active) {
      std::cerr << "no subcommand selected\n";
      return 2;
    }
    torelli::RunConfig cfg = merge_config(flags, refs_of.at(active));

    if (*dims) return emit(torelli::cmd_dims(cfg), cfg);
    if (*table) return emit(torelli::cmd_table219(cfg), cfg);
    if (*verify) return emit(torelli::cmd_verify(cfg, verify_suite), cfg);
    if (*identities_run)
      return emit(torelli::cmd_identities(cfg, id_suite), cfg);
    if (*lagrangian_verify) return emit(torelli::cmd_lagrangian(cfg), cfg);
    if (*contract)
      return emit(torelli::cmd_contract(cfg, diagram_text, colored), cfg);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const torelli::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
