#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catclass/classifiers/hyperparams.hpp"
#include "catclass/dataset/corpus.hpp"

namespace catclass::pipeline {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitInternal = 3 };

/// Options shared by all subcommands; each subcommand reads what it needs.
struct RunConfig {
  std::string data = std::string(corpus::kElectionId);
  std::optional<std::string> schema;
  std::string algo = "all";
  Hyperparams params;
  std::size_t folds = 10;
  std::optional<std::uint64_t> seed;
  bool test_on_train = false;
  std::optional<std::string> from_matrix;
  std::optional<std::string> out;
  std::optional<std::string> model;
  bool svg = false;
  std::vector<std::string> attributes;
  unsigned threads = 1;
  std::size_t bins = 10;
};

// Subcommands. They throw library errors; run_cli maps them to exit codes.
void cmd_validate(const RunConfig& config, std::ostream& out);
void cmd_evaluate(const RunConfig& config, std::ostream& out);
void cmd_train(const RunConfig& config, std::ostream& out);
void cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_export_corpus(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and dispatches. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catclass::pipeline
