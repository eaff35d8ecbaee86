#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dflow/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Branching spaces, branching homology and dihomotopy checks on finite flows"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string mode = "strict";
  dflow::CommandOptions options;
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--mode", mode, "cofibrancy handling")
      ->check(CLI::IsMember({"strict", "permissive"}));
  app.add_option("--max-dim", options.max_dim, "highest homology degree")->check(CLI::NonNegativeNumber);

  std::string file;
  std::string side = "minus";
  std::string st_class = "st0";
  std::string state;
  const std::map<std::string, std::string> help = {
      {"validate", "parse and validate a flow document"},
      {"branch", "summarize the branching space of a flow document"},
      {"merge", "summarize the merging space of a flow document"},
      {"homology", "branching or merging homology of a flow document"},
      {"les", "long exact sequence of a morphism document"},
      {"check", "membership of a morphism document in st0 .. st3"},
      {"essential", "essential state subsets of a flow document"}};
  for (const auto& [verb, description] : help) {
    CLI::App* sub = app.add_subcommand(verb, description);
    sub->add_option("file", file, "input document")->required();
    if (verb == "branch" || verb == "merge") {
      sub->add_option("--state", state, "only this state");
      sub->add_flag("--dump", options.dump, "print the germ simplicial sets");
    }
    if (verb == "homology" || verb == "les")
      sub->add_option("--side", side, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
    if (verb == "check")
      sub->add_option("--class", st_class, "st0, st1, st2 or st3")
          ->check(CLI::IsMember({"st0", "st1", "st2", "st3"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  options.mode = mode == "strict" ? dflow::CofibrancyMode::strict : dflow::CofibrancyMode::permissive;
  options.side = side == "minus" ? dflow::Side::minus : dflow::Side::plus;
  options.st_class = st_class[2] - '0';
  if (!state.empty()) options.state = state;

  const std::string verb = app.get_subcommands().front()->get_name();
  const dflow::CommandResult r = dflow::run_command(verb, file, options);
  if (format == "structured") {
    std::cout << r.structured.dump(2) << "\n";
  } else {
    (r.exit_code == dflow::exit_code::ok || r.exit_code == dflow::exit_code::negative ? std::cout
                                                                                       : std::cerr)
        << r.text;
  }
  return r.exit_code;
}
