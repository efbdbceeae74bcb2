// Copyright 2026 The Anafor Authors.
//
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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "anafor/annotation_io.h"
#include "anafor/dictionary.h"
#include "anafor/evaluator.h"
#include "anafor/morph.h"
#include "anafor/preferences.h"
#include "anafor/resolver.h"
#include "anafor/trainer.h"

namespace anafor {
namespace cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string dict;
  std::string weights;
  std::size_t scope = 3;
  std::string lexicon;
  std::string format = "text";
};

void AddCommonOptions(CLI::App *cmd, CommonOptions *opts, bool scoring) {
  cmd->add_option("--dict", opts->dict,
                  "Proper-name gazetteer (falls back to $ANAFOR_DICT)");
  if (scoring) {
    cmd->add_option("--weights", opts->weights,
                    "Preference weights file (default: built-in scores)");
  }
  cmd->add_option("--scope", opts->scope,
                  "Sentences searched before the pronoun's sentence")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--lexicon", opts->lexicon,
                  "Pronoun lexicon and suffix tables (default: built-in)");
}

void AddFormatOption(CLI::App *cmd, CommonOptions *opts) {
  cmd->add_option("--format", opts->format, "Report format")
      ->check(CLI::IsMember({"text", "kv"}));
}

ReportFormat FormatOf(const CommonOptions &opts) {
  return opts.format == "kv" ? ReportFormat::kKeyValue : ReportFormat::kText;
}

NameDictionary LoadDict(const CommonOptions &opts) {
  std::string path = opts.dict;
  if (path.empty()) {
    if (const char *env = std::getenv("ANAFOR_DICT")) path = env;
  }
  if (path.empty()) {
    throw UsageError("no dictionary: pass --dict or set ANAFOR_DICT");
  }
  return LoadDictionary(path);
}

// Resolver inputs shared by every command that resolves text.
struct Pipeline {
  Lexicon lexicon;
  NameDictionary dict;
  ResolverOptions options;

  explicit Pipeline(const CommonOptions &opts)
      : lexicon(opts.lexicon.empty() ? Lexicon::Default()
                                     : Lexicon::Load(opts.lexicon)),
        dict(LoadDict(opts)) {
    if (!opts.weights.empty()) options.weights = LoadWeights(opts.weights);
    options.scope.max_back_sentences = opts.scope;
    options.lexicon = &lexicon;
  }

  Pipeline(const Pipeline &) = delete;
  Pipeline &operator=(const Pipeline &) = delete;
};

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << contents;
  if (!file) throw std::runtime_error("error writing " + path);
}

struct ResolveOutput {
  std::string paraphrase;
  std::string trace;
};

ResolveOutput ResolveFile(const std::string &path, const Pipeline &pipeline,
                          bool baseline) {
  const Document doc = LoadDocument(path, pipeline.lexicon);
  const ResolvedDocument resolved =
      baseline ? BaselineResolveDocument(doc, pipeline.dict, pipeline.options)
               : ResolveDocument(doc, pipeline.dict, pipeline.options);
  return {SerializeDocument(resolved.paraphrased),
          FormatTrace(resolved.resolutions)};
}

// Files are independent, so each runs on its own task; results are
// collected in input order.
template <typename Result, typename Fn>
std::vector<Result> MapFiles(const std::vector<std::string> &paths, Fn fn) {
  if (paths.size() == 1) return {fn(paths.front())};
  std::vector<std::future<Result>> tasks;
  for (const auto &path : paths) {
    tasks.push_back(std::async(std::launch::async, fn, path));
  }
  std::vector<Result> results;
  for (auto &task : tasks) results.push_back(task.get());
  return results;
}

struct ResolveArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string trace;
  std::string output_dir;
};

int RunResolve(const CommonOptions &opts, const ResolveArgs &args,
               bool baseline, std::ostream &out) {
  const bool multi = args.inputs.size() > 1;
  if (multi && args.output_dir.empty()) {
    throw UsageError("several inputs need --output-dir");
  }
  if (!args.output_dir.empty() && (!args.output.empty() || !args.trace.empty())) {
    throw UsageError("--output-dir cannot be combined with --output/--trace");
  }
  const Pipeline pipeline(opts);
  const auto results = MapFiles<ResolveOutput>(
      args.inputs, [&](const std::string &path) {
        return ResolveFile(path, pipeline, baseline);
      });

  if (!args.output_dir.empty()) {
    std::map<std::string, std::string> stems;
    for (const auto &input : args.inputs) {
      const std::string stem = fs::path(input).stem().string();
      if (!stems.emplace(stem, input).second) {
        throw UsageError("inputs " + stems[stem] + " and " + input +
                         " share the output name " + stem);
      }
    }
    fs::create_directories(args.output_dir);
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
      const fs::path stem = fs::path(args.inputs[i]).stem();
      const fs::path dir(args.output_dir);
      WriteFile((dir / stem).string() + ".resolved.txt", results[i].paraphrase);
      WriteFile((dir / stem).string() + ".trace.tsv", results[i].trace);
    }
    return 0;
  }

  if (args.output.empty()) {
    out << results.front().paraphrase;
  } else {
    WriteFile(args.output, results.front().paraphrase);
  }
  if (!args.trace.empty()) WriteFile(args.trace, results.front().trace);
  return 0;
}

struct TrainArgs {
  std::vector<std::string> inputs;
  std::string output;
  double learning_rate = 0.05;
  int epochs = 100;
};

int RunTrain(const CommonOptions &opts, const TrainArgs &args,
             std::ostream &out) {
  const Pipeline pipeline(opts);
  std::vector<Document> corpus;
  for (const auto &path : args.inputs) {
    corpus.push_back(LoadDocument(path, pipeline.lexicon));
  }
  const TrainingSet set = BuildInstances(
      corpus, pipeline.dict, pipeline.options.scope, pipeline.lexicon);
  if (set.instances.empty()) {
    throw std::runtime_error("no usable training instances (" +
                             std::to_string(set.skipped) + " skipped)");
  }
  TrainConfig config;
  config.learning_rate = args.learning_rate;
  config.max_epochs = args.epochs;
  const TrainReport report = Train(set.instances, config);
  WriteFile(args.output, FormatWeights(report.weights));

  if (FormatOf(opts) == ReportFormat::kKeyValue) {
    out << "instances=" << set.instances.size() << "\n"
        << "skipped=" << set.skipped << "\n"
        << "unlinked=" << set.unlinked << "\n"
        << "epochs=" << report.epochs << "\n"
        << "final_errors=" << report.final_errors << "\n";
  } else {
    out << "Training instances  " << set.instances.size() << "\n"
        << "Skipped pronouns    " << set.skipped << "\n"
        << "Unlinked pronouns   " << set.unlinked << "\n"
        << "Epochs              " << report.epochs << "\n"
        << "Final errors        " << report.final_errors << "\n"
        << "Weights written to  " << args.output << "\n";
  }
  return 0;
}

std::string ReadText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct EvalArgs {
  std::vector<std::string> gold;
  std::vector<std::string> traces;
};

int RunEval(const CommonOptions &opts, const EvalArgs &args,
            std::ostream &out) {
  if (args.gold.size() != args.traces.size()) {
    throw UsageError("--gold and --trace must be given the same number of times");
  }
  const Lexicon lexicon =
      opts.lexicon.empty() ? Lexicon::Default() : Lexicon::Load(opts.lexicon);
  Metrics total;
  for (std::size_t i = 0; i < args.gold.size(); ++i) {
    const Document gold = LoadDocument(args.gold[i], lexicon);
    try {
      total += Evaluate(ParseTrace(ReadText(args.traces[i])), gold);
    } catch (const std::exception &e) {
      throw std::runtime_error(args.traces[i] + ": " + e.what());
    }
  }
  out << FormatMetrics(total, FormatOf(opts));
  return 0;
}

int RunCompare(const CommonOptions &opts,
               const std::vector<std::string> &gold_files, std::ostream &out) {
  const Pipeline pipeline(opts);
  struct Pair {
    Metrics system;
    Metrics baseline;
  };
  const auto results =
      MapFiles<Pair>(gold_files, [&](const std::string &path) {
        const Document gold = LoadDocument(path, pipeline.lexicon);
        return Pair{
            Evaluate(ResolveDocument(gold, pipeline.dict, pipeline.options),
                     gold),
            Evaluate(
                BaselineResolveDocument(gold, pipeline.dict, pipeline.options),
                gold)};
      });
  Metrics system, baseline;
  for (const auto &r : results) {
    system += r.system;
    baseline += r.baseline;
  }
  out << FormatComparison(Compare(system, baseline), FormatOf(opts));
  return 0;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Pronoun resolution for Turkish narrative text", "anafor"};
  app.require_subcommand(1);

  CommonOptions opts;

  ResolveArgs resolve_args;
  auto add_resolve = [&](const char *name, const char *help) {
    CLI::App *cmd = app.add_subcommand(name, help);
    AddCommonOptions(cmd, &opts, true);
    cmd->add_option("inputs", resolve_args.inputs, "Annotated corpus files")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", resolve_args.output,
                    "Paraphrased text (default: standard output)");
    cmd->add_option("--trace", resolve_args.trace, "Resolution trace file");
    cmd->add_option("--output-dir", resolve_args.output_dir,
                    "Directory for per-file outputs");
    return cmd;
  };
  CLI::App *resolve = add_resolve("resolve", "Resolve pronouns");
  CLI::App *baseline =
      add_resolve("baseline", "Resolve pronouns choosing the most recent candidate");

  TrainArgs train_args;
  CLI::App *train =
      app.add_subcommand("train", "Learn preference weights from gold links");
  AddCommonOptions(train, &opts, false);
  AddFormatOption(train, &opts);
  train->add_option("inputs", train_args.inputs, "Gold-annotated corpus files")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("-o,--output", train_args.output, "Weights file to write")
      ->required();
  train->add_option("--lr", train_args.learning_rate, "Learning rate")
      ->check(CLI::PositiveNumber);
  train->add_option("--epochs", train_args.epochs, "Maximum epochs")
      ->check(CLI::PositiveNumber);

  EvalArgs eval_args;
  CLI::App *eval = app.add_subcommand("eval", "Score a trace against gold links");
  eval->add_option("--gold", eval_args.gold, "Gold-annotated corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--trace", eval_args.traces, "Trace written by resolve")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--lexicon", opts.lexicon, "Pronoun lexicon (default: built-in)");
  AddFormatOption(eval, &opts);

  std::vector<std::string> compare_inputs;
  CLI::App *compare = app.add_subcommand(
      "compare", "Evaluate the resolver and the recency baseline side by side");
  AddCommonOptions(compare, &opts, true);
  AddFormatOption(compare, &opts);
  compare->add_option("inputs", compare_inputs, "Gold-annotated corpus files")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (resolve->parsed()) return RunResolve(opts, resolve_args, false, out);
    if (baseline->parsed()) return RunResolve(opts, resolve_args, true, out);
    if (train->parsed()) return RunTrain(opts, train_args, out);
    if (eval->parsed()) return RunEval(opts, eval_args, out);
    if (compare->parsed()) return RunCompare(opts, compare_inputs, out);
  } catch (const UsageError &e) {
    err << "anafor: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "anafor: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cli
}  // namespace anafor
