#include "oamsim/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"oamsim: intrinsic orbital angular momentum dynamics of twisted electrons in storage rings"};
  app.require_subcommand(1, 1);

  oamsim::CommandOptions options;
  std::string config_path;
  std::string out_path;
  std::string format;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"constants", "Print the reference constants and their deviations"},
      {"freeze", "Solve the frozen-OAM ring conditions"},
      {"moments", "Report the electromagnetic moments of the beam"},
      {"simulate", "Evaluate polarization dynamics (closed form and oracle)"},
      {"scan", "Scan the resonance drive frequency"},
      {"verify", "Run the acceptance checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "Output file (default: standard output)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << nlohmann::json{{"error", {{"kind", "config"}, {"message", e.what()}, {"exit_code", 2}}}}.dump()
              << '\n';
    return 2;
  }

  options.command = app.get_subcommands().front()->get_name();
  if (!config_path.empty()) options.config_path = config_path;
  if (!out_path.empty()) options.out_path = out_path;
  if (!format.empty()) options.format = oamsim::parse_format(format);

  if (const char* threads = std::getenv("OAMSIM_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || value < 0) {
      std::cerr << nlohmann::json{{"error",
                                   {{"kind", "config"},
                                    {"message", "OAMSIM_THREADS must be a non-negative integer"},
                                    {"exit_code", 2}}}}
                       .dump()
                << '\n';
      return 2;
    }
    options.threads = static_cast<unsigned>(value);
  }

  return oamsim::run_command(options, std::cout, std::cerr);
}
