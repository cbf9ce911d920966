#include "catclass/pipeline/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catclass/classifiers/decision.hpp"
#include "catclass/classifiers/model.hpp"
#include "catclass/error.hpp"
#include "catclass/evaluation/report.hpp"
#include "catclass/pipeline/report_io.hpp"
#include "catclass/pipeline/svg.hpp"

namespace catclass::pipeline {
namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  return out;
}

bool is_embedded(const RunConfig& config) { return config.data == corpus::kElectionId; }

std::shared_ptr<const AttributeSchema> load_schema(const RunConfig& config) {
  if (is_embedded(config)) {
    if (config.schema) throw InvalidArgument("--schema cannot be combined with the embedded corpus");
    return corpus::election_schema();
  }
  if (!config.schema) throw InvalidArgument("--schema is required when --data is a file");
  auto in = open_input(*config.schema);
  return std::make_shared<const AttributeSchema>(parse_schema(in));
}

Dataset load_dataset(const RunConfig& config, std::shared_ptr<const AttributeSchema> schema, LabelMode mode) {
  if (is_embedded(config)) return corpus::election_dataset();
  auto in = open_input(config.data);
  return parse_csv(in, std::move(schema), mode);
}

std::vector<Algorithm> selected_algorithms(const std::string& id) {
  if (id == "all") return {Algorithm::knn, Algorithm::naive_bayes, Algorithm::tree};
  auto algo = parse_algorithm(id);
  if (!algo) throw InvalidArgument("unknown algorithm '" + id + "' (knn, naive-bayes, tree, all)");
  return {*algo};
}

std::string relevant_params(Algorithm algo, const Hyperparams& p) {
  switch (algo) {
    case Algorithm::knn:
      return "k=" + std::to_string(p.knn_k);
    case Algorithm::naive_bayes: {
      std::ostringstream s;
      s << "alpha=" << p.nb_alpha;
      return s.str();
    }
    case Algorithm::tree:
      return "min_samples=" + std::to_string(p.tree_min_samples) +
             " max_depth=" + (p.tree_max_depth ? std::to_string(*p.tree_max_depth) : "unlimited");
  }
  return "";
}

void write_report_files(const fs::path& dir, const EvaluationReport& report, bool svg) {
  fs::create_directories(dir);
  const auto algo = std::string(algorithm_id(report.algorithm));
  {
    auto f = open_output(dir / "metrics.tsv");
    write_metrics_table(f, report.class_labels, report.metrics);
  }
  {
    auto f = open_output(dir / "confusion.tsv");
    write_confusion_table(f, report.class_labels, report.matrix);
  }
  for (const auto& series : report.curves) {
    const auto& label = report.class_labels.at(series.positive_class);
    const auto stem = std::string(curve_kind_id(series.kind)) + "_" + file_slug(label);
    {
      auto f = open_output(dir / (stem + ".csv"));
      write_curve_csv(f, series, label, algo);
    }
    if (svg && series.points.size() >= 2) {
      auto f = open_output(dir / (stem + ".svg"));
      emit_curve_svg(f, series, std::string(curve_kind_id(series.kind)) + " - " + label + " - " + algo);
    }
  }
}

}  // namespace

void cmd_validate(const RunConfig& config, std::ostream& out) {
  const auto schema = load_schema(config);
  const auto data = load_dataset(config, schema, LabelMode::detect);
  if (!data.labeled()) {
    out << data.size() << " records (unlabeled)\n";
    return;
  }
  const auto dist = class_counts(data);
  out << data.size() << " records; classes: ";
  for (ClassIndex c = 0; c < dist.size(); ++c) {
    out << (c ? ", " : "") << schema->class_label(c) << '=' << dist[c];
  }
  out << '\n';

  std::vector<std::string> names = config.attributes;
  if (names.empty()) {
    for (const auto& f : schema->features()) names.push_back(f.name);
  }
  for (const auto& name : names) {
    out << '\n';
    write_crosstab(out, crosstab(data, name));
  }
}

void cmd_evaluate(const RunConfig& config, std::ostream& out) {
  if (config.from_matrix) {
    auto in = open_input(*config.from_matrix);
    const auto labeled = read_confusion_table(in);
    const auto metrics = metrics_for_all_classes(labeled.matrix);
    write_metrics_table(out, labeled.class_labels, metrics);
    if (config.out) {
      fs::create_directories(*config.out);
      auto f = open_output(fs::path(*config.out) / "metrics.tsv");
      write_metrics_table(f, labeled.class_labels, metrics);
    }
    return;
  }
  if (!config.out) throw InvalidArgument("evaluate needs --out DIR");
  config.params.validate();
  const auto algorithms = selected_algorithms(config.algo);
  const auto schema = load_schema(config);
  const auto data = load_dataset(config, schema, LabelMode::labeled);
  if (data.empty()) throw DataError("no records to evaluate");

  const auto protocol = config.test_on_train ? Protocol::test_on_train() : Protocol::k_fold(config.folds, config.seed);
  if (protocol.kind == Protocol::Kind::k_fold && !protocol.seed && protocol.folds != data.size()) {
    throw InvalidArgument("--seed is required for k-fold evaluation (or use --test-on-train)");
  }

  const fs::path root(*config.out);
  fs::create_directories(root);
  std::ostringstream summary;
  summary << "algorithm\tCA\tmajority_baseline\tprotocol\thyperparams\n";
  for (auto algo : algorithms) {
    const auto report = evaluate(data, algo, config.params, protocol, config.threads, config.bins);
    write_report_files(root / std::string(algorithm_id(algo)), report, config.svg);
    const auto ca = format_fixed(class_accuracy(report.matrix));
    const auto base = format_fixed(report.majority_baseline);
    summary << algorithm_id(algo) << '\t' << ca << '\t' << base << '\t' << report.protocol_text << '\t'
            << relevant_params(algo, config.params) << '\n';
    out << algorithm_id(algo) << ": CA " << ca << " (majority baseline " << base << ", " << report.protocol_text
        << ")\n";
  }
  {
    auto f = open_output(root / "summary.tsv");
    f << summary.str();
  }

  if (std::find(algorithms.begin(), algorithms.end(), Algorithm::tree) != algorithms.end()) {
    const auto tree = TreeModel::induce(data, config.params);
    const auto root_attr = tree.root_attribute();
    const std::string root_name = root_attr ? schema->feature(*root_attr).name : "(single leaf)";
    std::ostringstream check;
    check << "root attribute (tree trained on all " << data.size() << " records): " << root_name << '\n';
    if (is_embedded(config)) {
      const bool agrees = root_name == corpus::kElectionReferenceRoot;
      check << "reference root attribute: " << corpus::kElectionReferenceRoot << '\n'
            << "agreement: " << (agrees ? "yes" : "no") << '\n';
    }
    out << check.str();
    fs::create_directories(root / "tree");
    auto f = open_output(root / "tree" / "structure.txt");
    f << check.str() << '\n' << render_tree(tree);
  }
}

void cmd_train(const RunConfig& config, std::ostream& out) {
  if (!config.out) throw InvalidArgument("train needs --out MODEL_FILE");
  config.params.validate();
  const auto algorithms = selected_algorithms(config.algo);
  if (algorithms.size() != 1) throw InvalidArgument("train needs a single --algo (knn, naive-bayes, tree)");
  const auto schema = load_schema(config);
  const auto data = load_dataset(config, schema, LabelMode::labeled);
  const auto model = TrainedModel::train(algorithms.front(), data, config.params);
  auto f = open_output(*config.out);
  save_model(f, model);
  out << "trained " << algorithm_id(model.algorithm()) << " on " << data.size() << " records -> " << *config.out
      << '\n';
}

void cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.model) throw InvalidArgument("predict needs --model MODEL_FILE");
  const auto model = [&] {
    auto in = open_input(*config.model);
    return load_model(in);
  }();

  std::shared_ptr<const AttributeSchema> schema;
  if (is_embedded(config) || config.schema) {
    schema = load_schema(config);
  } else {
    schema = model.schema_ptr();
  }
  const auto data = load_dataset(config, schema, LabelMode::detect);
  const auto proba = model.predict_proba(data);

  std::ostringstream table;
  write_predictions(table, data.schema(), proba);
  if (config.out) {
    auto f = open_output(*config.out);
    f << table.str();
  } else {
    out << table.str();
  }

  if (data.labeled() && !data.empty()) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      hits += predict_label(proba[i]) == *data[i].label ? 1 : 0;
    }
    err << "accuracy on labeled input: " << format_fixed(static_cast<double>(hits) / static_cast<double>(data.size()))
        << " (" << hits << '/' << data.size() << ")\n";
  }
}

void cmd_export_corpus(const RunConfig& config, std::ostream& out) {
  if (!config.out) {
    out << corpus::election_csv_text();
    return;
  }
  const fs::path dir(*config.out);
  fs::create_directories(dir);
  {
    auto f = open_output(dir / "election.csv");
    f << corpus::election_csv_text();
  }
  {
    auto f = open_output(dir / "election.schema.json");
    f << corpus::election_schema_text();
  }
  out << "wrote " << (dir / "election.csv").string() << " and " << (dir / "election.schema.json").string() << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Categorical classification toolkit: validate, evaluate, train, predict", "catclass"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<std::size_t> max_depth;

  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", config.data, "CSV data file, or embedded:election")->capture_default_str();
    sub->add_option("--schema", config.schema, "JSON schema file (required for file data)");
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--algo", config.algo, "knn | naive-bayes | tree | all")->capture_default_str();
    sub->add_option("--k", config.params.knn_k, "KNN neighbour count")->capture_default_str();
    sub->add_option("--alpha", config.params.nb_alpha, "Naive Bayes smoothing strength")->capture_default_str();
    sub->add_option("--min-samples", config.params.tree_min_samples, "Tree: minimum records to split")
        ->capture_default_str();
    sub->add_option("--max-depth", max_depth, "Tree: maximum depth (default unlimited)");
  };

  auto* validate = app.add_subcommand("validate", "Parse data, print class counts and crosstabs");
  add_data(validate);
  validate->add_option("--attribute", config.attributes, "Restrict crosstabs to these attributes");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Cross-validate and write report files");
  add_data(evaluate_cmd);
  add_params(evaluate_cmd);
  evaluate_cmd->add_option("--folds", config.folds, "Number of stratified folds")->capture_default_str();
  evaluate_cmd->add_option("--seed", config.seed, "Fold shuffling seed (required for k-fold)");
  evaluate_cmd->add_flag("--test-on-train", config.test_on_train, "Evaluate on the training data");
  evaluate_cmd->add_option("--threads", config.threads, "Folds evaluated in parallel")->capture_default_str();
  evaluate_cmd->add_option("--bins", config.bins, "Calibration bins")->capture_default_str();
  evaluate_cmd->add_option("--from-matrix", config.from_matrix, "Only compute metrics from a confusion table");
  evaluate_cmd->add_option("--out", config.out, "Output directory");
  evaluate_cmd->add_flag("--svg", config.svg, "Also write SVG plots of every curve");

  auto* train = app.add_subcommand("train", "Train one model and save it");
  add_data(train);
  add_params(train);
  train->add_option("--out", config.out, "Model file to write");

  auto* predict = app.add_subcommand("predict", "Apply a saved model to data");
  add_data(predict);
  predict->add_option("--model", config.model, "Model file from train");
  predict->add_option("--out", config.out, "Write predictions here instead of stdout");

  auto* export_corpus = app.add_subcommand("export-corpus", "Write the embedded corpus and schema");
  export_corpus->add_option("--out", config.out, "Output directory (default: CSV to stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.params.tree_max_depth = max_depth;

  try {
    if (*validate) cmd_validate(config, out);
    if (*evaluate_cmd) cmd_evaluate(config, out);
    if (*train) cmd_train(config, out);
    if (*predict) cmd_predict(config, out, err);
    if (*export_corpus) cmd_export_corpus(config, out);
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace catclass::pipeline
