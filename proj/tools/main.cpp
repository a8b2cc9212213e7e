#include <iostream>

#include "CLI11.hpp"
#include "app.hpp"

int main(int argc, char** argv) {
  using namespace ratcurve::app;
  CLI::App cli{"Exact analysis of rational maps P^1 -> P^(n-1) given by binary forms"};
  cli.require_subcommand(1);
  Options opt;
  std::string path;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Override the instance seed");
    sub->add_option("--samples", opt.samples, "General points drawn for the map degree")
        ->check(CLI::Range(1, 1000));
    sub->add_flag("--deterministic", opt.deterministic, "Omit the timestamp from the report");
    sub->add_flag("--plain", opt.plain, "Human-readable output instead of JSON");
  };
  std::vector<CLI::App*> instance_cmds;
  for (const char* name : {"analyze", "fiber", "reparam", "core"}) {
    auto* sub = cli.add_subcommand(name);
    sub->add_option("instance", path, "Instance file")->required();
    add_common(sub);
    instance_cmds.push_back(sub);
  }
  instance_cmds[0]->description("Map degree, multiplicities, core and the birationality table");
  instance_cmds[1]->description("Fiber over a point of P^(n-1)");
  instance_cmds[1]->add_option("--point", opt.point, "Point a:b:... with n coordinates")->required();
  instance_cmds[2]->description("Rewrite the map over k[f1,f2] as a birational map");
  instance_cmds[3]->description("Core of the ideal of generators");

  auto* self = cli.add_subcommand("selftest", "Run the invariant suite over the built-in corpora");
  self->add_option("--seed", seed, "Corpus seed");
  self->add_option("--d-max", opt.d_max, "Exhaustive monomial sweep up to this degree");
  self->add_option("--corpus-size", opt.corpus_size, "Random monomial and dense cases");
  self->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  self->add_option("--mutate", opt.mutate, "Inject a fault (map-degree, syzygy)")->group("");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  auto* sub = cli.get_subcommands().front();
  if (const auto* o = sub->get_option_no_throw("--seed"); o != nullptr && o->count() > 0) opt.seed = seed;

  const CommandResult res =
      sub == self ? cmd_selftest(opt) : run_instance_command(sub->get_name(), path, opt);
  std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err << "\n";
  return res.exit_code;
}
