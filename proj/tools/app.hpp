#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratcurve/instance.hpp"

namespace ratcurve::app {

enum ExitCode : int { kOk = 0, kInputError = 1, kCertificationError = 2, kSelftestFailure = 3 };

struct Options {
  std::optional<std::uint64_t> seed;  // overrides the instance seed
  int samples = 7;
  bool deterministic = false;
  bool plain = false;
  std::string point;
  int d_max = 12;
  int corpus_size = 200;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string mutate;    // selftest negative control, see selftest.hpp
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

CommandResult cmd_analyze(const Instance& inst, const Options& opt);
CommandResult cmd_fiber(const Instance& inst, const Options& opt);
CommandResult cmd_reparam(const Instance& inst, const Options& opt);
CommandResult cmd_core(const Instance& inst, const Options& opt);
CommandResult cmd_selftest(const Options& opt);

/// Loads the instance at `path` and dispatches; input errors become exit 1.
CommandResult run_instance_command(const std::string& command, const std::string& path, const Options& opt);

}  // namespace ratcurve::app
