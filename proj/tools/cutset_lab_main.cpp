#include <iostream>

#include "CLI11.hpp"
#include "cutlab/experiments.hpp"

namespace {

// exit codes: 0 ok, 2 config error, 3 resource cap, 4 assertion failure
int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const cutlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const cutlab::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const cutlab::CheckFailure& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return 4;
  } catch (const cutlab::MarginError& e) {
    std::cerr << "margin violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutset workbench: exact cutset, closeness and growth "
               "experiments on finite windows of infinite graphs"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("config", config_path, "experiment config file")
      ->required();

  auto* list = app.add_subcommand("list-providers",
                                  "print the provider families and grammar");

  std::vector<std::string> spec;
  int radius = 3;
  bool dot = false;
  auto* dump = app.add_subcommand("dump-window",
                                  "print a window (adjacency list or DOT)");
  dump->add_option("spec", spec,
                   "provider spec as key=value pairs (family=..., d=..., "
                   "gens=..., k=..., n=...)")
      ->required();
  dump->add_option("--radius", radius, "window radius")->required();
  dump->add_flag("--dot", dot, "emit DOT instead of the adjacency list");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return guarded([&] {
      auto cfg = cutlab::ExperimentConfig::parse_file(config_path);
      auto result = cutlab::run_experiment(cfg);
      std::cout << "wrote " << result.files.size() << " files to "
                << result.output_dir << "\n";
    });
  }
  if (list->parsed()) {
    std::cout << cutlab::provider_grammar_help();
    std::cout << "\nexperiments:\n";
    for (const auto& name : cutlab::experiment_names())
      std::cout << "  " << name << "\n";
    return 0;
  }
  if (dump->parsed()) {
    return guarded([&] {
      std::string text = "[provider]\n";
      for (const auto& kv : spec) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw cutlab::ConfigError("dump-window spec must be key=value: " +
                                    kv);
        text += kv.substr(0, eq) + " = " + kv.substr(eq + 1) + "\n";
      }
      auto cfg = cutlab::ExperimentConfig::parse_text(text, "<cli>");
      auto provider = cutlab::make_provider(cfg, "provider");
      auto w = cutlab::build_window(provider, radius);
      std::cout << (dot ? cutlab::dump_dot(w) : cutlab::dump_window(w));
    });
  }
  return 0;
}
