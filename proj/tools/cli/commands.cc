// Copyright 2026 The segeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/io.h"
#include "cli/manifest.h"
#include "cli/reports.h"
#include "segeval/analysis.h"
#include "segeval/bleu.h"
#include "segeval/error.h"
#include "segeval/mteval.h"
#include "segeval/parallel.h"
#include "segeval/preprocess.h"
#include "segeval/prob_log.h"
#include "segeval/rules_io.h"
#include "segeval/segment.h"
#include "segeval/ter.h"
#include "segeval/unicode.h"
#include "segeval/winner.h"

namespace segeval::cli {
namespace {

struct GlobalOptions {
  int threads = 0;
  std::string manifest;
};

struct IoOptions {
  std::string input = kStdStream;
  std::string output = kStdStream;
};

// How hypothesis and reference lines become tokens before scoring.
struct TextOptions {
  bool tokenize = false;
  bool mteval = false;
  bool lowercase = false;
  std::string lang = "en";
};

struct TerFlags {
  int max_shift_span = TerOptions{}.max_shift_span;
  int max_shift_distance = TerOptions{}.max_shift_distance;

  TerOptions ToOptions() const { return {max_shift_span, max_shift_distance}; }
};

struct BinFlags {
  int bins = kDefaultQuantileBins;
  std::vector<int64_t> edges;

  LengthBinSpec ToSpec() const {
    return edges.empty() ? LengthBinSpec::Quantiles(bins)
                         : LengthBinSpec::Edges(edges);
  }
  std::string Describe() const {
    if (edges.empty()) return "quantiles:" + std::to_string(bins);
    std::string out = "edges:";
    for (size_t i = 0; i < edges.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(edges[i]);
    }
    return out;
  }
};

struct ReportPaths {
  std::string csv;
  std::string json;
  std::string svg;
};

int ResolveThreads(int requested) {
  if (const char* env = std::getenv("SEGEVAL_THREADS"); env && *env) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 4096) {
      throw InvalidArgument("SEGEVAL_THREADS must be a positive integer, got '" +
                            std::string(env) + "'");
    }
    return static_cast<int>(value);
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string Bool(bool value) { return value ? "true" : "false"; }

void AddTextOptions(CLI::App* cmd, TextOptions& text, bool lowercase = true) {
  auto* tok = cmd->add_flag("--tokenize", text.tokenize,
                            "Tokenize raw input with the preprocess tokenizer");
  auto* mteval = cmd->add_flag("--mteval-tok", text.mteval,
                               "Tokenize raw input the mteval way");
  tok->excludes(mteval);
  if (lowercase) {
    cmd->add_flag("--lowercase", text.lowercase, "Case-insensitive matching");
  }
  cmd->add_option("--lang", text.lang, "Tokenizer language")
      ->capture_default_str();
}

void RecordTextOptions(const TextOptions& text, RunManifest& manifest) {
  manifest.AddSetting("tokenization", text.mteval     ? "mteval"
                                      : text.tokenize ? "preprocess"
                                                      : "pretokenized");
  manifest.AddSetting("lang", text.lang);
  manifest.AddSetting("lowercase", Bool(text.lowercase));
}

void AddTerFlags(CLI::App* cmd, TerFlags& ter) {
  cmd->add_option("--max-shift-span", ter.max_shift_span,
                  "Longest span a TER shift may move")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-shift-distance", ter.max_shift_distance,
                  "Farthest a TER shift may move a span")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void RecordTerFlags(const TerFlags& ter, RunManifest& manifest) {
  manifest.AddSetting("max_shift_span", std::to_string(ter.max_shift_span));
  manifest.AddSetting("max_shift_distance",
                      std::to_string(ter.max_shift_distance));
}

void AddBinFlags(CLI::App* cmd, BinFlags& bins) {
  auto* q = cmd->add_option("--bins", bins.bins,
                            "Number of quantile bins over reference length")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
  auto* e = cmd->add_option("--edges", bins.edges,
                            "Explicit ascending bin edges (characters)")
                ->delimiter(',');
  q->excludes(e);
}

void AddReportPaths(CLI::App* cmd, ReportPaths& paths, bool svg = true) {
  cmd->add_option("--csv", paths.csv, "CSV report path");
  cmd->add_option("--json", paths.json, "JSON report path");
  if (svg) cmd->add_option("--svg", paths.svg, "SVG chart path");
}

TokenizedLine ToTokens(const std::string& line, const TextOptions& text,
                       const Preprocessor* preprocessor) {
  TokenizedLine tokens;
  if (text.mteval) {
    tokens = MtevalTokenize(line);
  } else if (preprocessor != nullptr) {
    tokens.tokens = unicode::SplitOnSpaces(preprocessor->Process(line));
  } else {
    tokens.tokens = unicode::SplitOnSpaces(line);
  }
  tokens.lang = text.lang;
  return tokens;
}

std::vector<TokenizedLine> LoadCorpus(const std::string& path,
                                      const TextOptions& text, int threads) {
  const std::vector<std::string> lines = ReadLines(path);
  std::optional<Preprocessor> preprocessor;
  if (text.tokenize && !text.mteval) {
    PreprocessOptions options;
    options.lang = text.lang;
    preprocessor.emplace(options);
  }
  std::vector<TokenizedLine> corpus(lines.size());
  ParallelFor(lines.size(), threads, [&](size_t i) {
    corpus[i] = ToTokens(lines[i], text,
                         preprocessor ? &*preprocessor : nullptr);
  });
  return corpus;
}

std::vector<TokenizedLine> LoadPretokenized(const std::string& path) {
  TextOptions text;
  return LoadCorpus(path, text, 1);
}

void CheckSameLength(const std::string& hyp_path, size_t hyp_lines,
                     const std::string& ref_path, size_t ref_lines) {
  if (hyp_lines != ref_lines) {
    throw Mismatch("line count mismatch: " + hyp_path + " has " +
                   std::to_string(hyp_lines) + " lines but " + ref_path +
                   " has " + std::to_string(ref_lines));
  }
}

void WriteIfRequested(const std::string& path, const std::string& text,
                      const std::string& role, std::ostream& out,
                      RunManifest& manifest) {
  if (path.empty()) return;
  WriteText(path, text, out);
  if (path != kStdStream) manifest.AddOutput(role, path);
}

std::string AlignedTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string BinName(int64_t lo, int64_t hi, bool inclusive) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) +
         (inclusive ? "]" : ")");
}

// Commands. Each returns after writing its outputs; the manifest collects
// settings and files as it goes.

void RunPreprocess(const IoOptions& io, const PreprocessOptions& options,
                   int threads, std::ostream& out, std::ostream& err,
                   RunManifest& manifest) {
  const Preprocessor preprocessor(options);
  std::string steps;
  for (PreprocessStep step : options.steps) {
    if (!steps.empty()) steps += ',';
    steps += StepName(step);
  }
  manifest.AddSetting("steps", steps);
  manifest.AddSetting("lang", options.lang);
  manifest.AddInput("input", io.input);
  if (!preprocessor.tokenizer().known_language()) {
    err << "warning: no tokenizer rules for language '" << options.lang
        << "'; using default rules\n";
  }
  PreprocessDiagnostics diagnostics;
  TransformLines(io.input, io.output, out, threads,
                 [&](const std::string& line, size_t) {
                   return preprocessor.Process(line, &diagnostics);
                 });
  if (diagnostics.unbalanced_parens > 0) {
    err << "warning: " << diagnostics.unbalanced_parens
        << " line(s) with unbalanced parentheses\n";
  }
  if (io.output != kStdStream) manifest.AddOutput("output", io.output);
}

struct LearnFlags {
  std::vector<std::string> inputs;
  std::string output = kStdStream;
  int merges = -1;
  int min_frequency = kDefaultMinFrequency;
  bool joint = false;
};

void RunLearnBpe(const LearnFlags& flags, std::ostream& out,
                 std::ostream& err, RunManifest& manifest) {
  const int merges = flags.merges >= 0 ? flags.merges
                     : flags.joint     ? kDefaultJointMerges
                                       : kDefaultMerges;
  manifest.AddSetting("merges", std::to_string(merges));
  manifest.AddSetting("min_frequency", std::to_string(flags.min_frequency));
  manifest.AddSetting("joint", Bool(flags.joint));
  MergeRuleTable table;
  if (flags.joint) {
    if (flags.inputs.size() < 2) {
      throw InvalidArgument("--joint needs at least two input files");
    }
    std::vector<LanguageCorpus> corpora;
    for (const std::string& path : flags.inputs) {
      manifest.AddInput("input", path);
      corpora.push_back({path, LoadPretokenized(path)});
    }
    table = LearnJoint(corpora, merges, flags.min_frequency);
  } else {
    if (flags.inputs.size() != 1) {
      throw InvalidArgument(
          "learn-bpe takes one input file; use --joint for several");
    }
    manifest.AddInput("input", flags.inputs[0]);
    table = LearnBpe(LoadPretokenized(flags.inputs[0]), merges,
                     flags.min_frequency);
  }
  if (static_cast<int>(table.size()) < merges) {
    err << "note: learned " << table.size() << " of " << merges
        << " merges; no remaining pair occurs at least " << flags.min_frequency
        << " times\n";
  }
  OutputFile file(flags.output, out);
  WriteRules(table, file.stream());
  file.Close();
  if (flags.output != kStdStream) manifest.AddOutput("rules", flags.output);
}

void RunApplyBpe(const IoOptions& io, const std::string& rules_path,
                 int threads, std::ostream& out, RunManifest& manifest) {
  const MergeRuleTable table = LoadRulesFile(rules_path);
  manifest.AddInput("rules", rules_path);
  manifest.AddInput("input", io.input);
  TransformLines(io.input, io.output, out, threads,
                 [&](const std::string& line, size_t) {
                   TokenizedLine words{unicode::SplitOnSpaces(line), ""};
                   return unicode::Join(ApplyBpe(table, words).tokens);
                 });
  if (io.output != kStdStream) manifest.AddOutput("output", io.output);
}

void RunSegmentChars(const IoOptions& io, int threads, std::ostream& out,
                     RunManifest& manifest) {
  manifest.AddInput("input", io.input);
  TransformLines(io.input, io.output, out, threads,
                 [](const std::string& line, size_t) {
                   TokenizedLine words{unicode::SplitOnSpaces(line), ""};
                   return unicode::Join(SegmentChars(words).tokens);
                 });
  if (io.output != kStdStream) manifest.AddOutput("output", io.output);
}

void RunUnsegment(const IoOptions& io, Scheme scheme, int threads,
                  std::ostream& out, RunManifest& manifest) {
  manifest.AddSetting("scheme", std::string(SchemeName(scheme)));
  manifest.AddInput("input", io.input);
  TransformLines(io.input, io.output, out, threads,
                 [scheme](const std::string& line, size_t line_number) {
                   SegmentedSentence seg{unicode::SplitOnSpaces(line), scheme};
                   return unicode::Join(Unsegment(seg, line_number).tokens);
                 });
  if (io.output != kStdStream) manifest.AddOutput("output", io.output);
}

void RunVocabStats(const std::string& input, Scheme scheme,
                   const std::string& json, std::ostream& out,
                   RunManifest& manifest) {
  manifest.AddSetting("scheme", std::string(SchemeName(scheme)));
  manifest.AddInput("input", input);
  const std::vector<std::string> lines = ReadLines(input);
  std::vector<SegmentedSentence> corpus;
  corpus.reserve(lines.size());
  for (const std::string& line : lines) {
    corpus.push_back({unicode::SplitOnSpaces(line), scheme});
  }
  const VocabStats stats = ComputeVocabStats(corpus);
  out << "scheme=" << SchemeName(scheme)
      << " distinct_tokens=" << stats.distinct_tokens
      << " token_count=" << stats.token_count
      << " type_token_ratio=" << FormatFixed(stats.type_token_ratio) << '\n';
  WriteIfRequested(json, VocabStatsJson(stats, scheme), "json", out, manifest);
}

struct ScoreFlags {
  std::string hyp;
  std::string ref;
  TextOptions text;
  TerFlags ter;
  std::string json;
};

void RunScoreBleu(const ScoreFlags& flags, int threads, std::ostream& out,
                  RunManifest& manifest) {
  RecordTextOptions(flags.text, manifest);
  manifest.AddInput("hyp", flags.hyp);
  manifest.AddInput("ref", flags.ref);
  const auto hyps = LoadCorpus(flags.hyp, flags.text, threads);
  const auto refs = LoadCorpus(flags.ref, flags.text, threads);
  CheckSameLength(flags.hyp, hyps.size(), flags.ref, refs.size());
  const BleuReport report =
      CorpusBleu(hyps, refs, flags.text.lowercase, threads);
  out << FormatBleuSummary(report) << '\n';
  WriteIfRequested(flags.json, BleuJson(report), "json", out, manifest);
}

void RunScoreTer(const ScoreFlags& flags, int threads, std::ostream& out,
                 RunManifest& manifest) {
  RecordTextOptions(flags.text, manifest);
  RecordTerFlags(flags.ter, manifest);
  manifest.AddInput("hyp", flags.hyp);
  manifest.AddInput("ref", flags.ref);
  const auto hyps = LoadCorpus(flags.hyp, flags.text, threads);
  const auto refs = LoadCorpus(flags.ref, flags.text, threads);
  CheckSameLength(flags.hyp, hyps.size(), flags.ref, refs.size());
  const TerAlignment ter =
      CorpusTer(hyps, refs, flags.ter.ToOptions(), threads);
  out << FormatTerSummary(ter) << '\n';
  WriteIfRequested(flags.json, TerJson(ter), "json", out, manifest);
}

struct CompareFlags {
  std::string hyp_a;
  std::string hyp_b;
  std::string ref;
  std::string label_a = "A";
  std::string label_b = "B";
  TextOptions text;
  TerFlags ter;
  std::string csv;
  std::string json;
  std::string tsv;
  std::string table;
};

void RunCompare(const CompareFlags& flags, int threads, std::ostream& out,
                RunManifest& manifest) {
  RecordTextOptions(flags.text, manifest);
  RecordTerFlags(flags.ter, manifest);
  manifest.AddSetting("label_a", flags.label_a);
  manifest.AddSetting("label_b", flags.label_b);
  manifest.AddInput("hyp_a", flags.hyp_a);
  manifest.AddInput("hyp_b", flags.hyp_b);
  manifest.AddInput("ref", flags.ref);
  const auto hyps_a = LoadCorpus(flags.hyp_a, flags.text, threads);
  const auto hyps_b = LoadCorpus(flags.hyp_b, flags.text, threads);
  const auto refs = LoadCorpus(flags.ref, flags.text, threads);
  CheckSameLength(flags.hyp_a, hyps_a.size(), flags.ref, refs.size());
  CheckSameLength(flags.hyp_b, hyps_b.size(), flags.ref, refs.size());
  const WinnerReport report =
      TerWinnerAnalysis(hyps_a, hyps_b, refs, flags.ter.ToOptions(), threads);
  out << WinnerTableText(report, flags.label_a, flags.label_b);
  WriteIfRequested(flags.csv, WinnerCsv(report), "csv", out, manifest);
  WriteIfRequested(flags.json,
                   WinnerJson(report, flags.label_a, flags.label_b), "json",
                   out, manifest);
  WriteIfRequested(flags.tsv, WinnerTsv(report), "tsv", out, manifest);
  WriteIfRequested(flags.table,
                   WinnerTableCsv(report, flags.label_a, flags.label_b),
                   "table", out, manifest);
}

struct AnalyzeFlags {
  std::string hyp;
  std::string ref;
  std::string rules;
  std::string log;
  double bin_width = kDefaultPeakinessBinWidth;
  TextOptions text;
  BinFlags bins;
  ReportPaths paths;
};

void RunLengthBleu(const AnalyzeFlags& flags, int threads, std::ostream& out,
                   RunManifest& manifest) {
  RecordTextOptions(flags.text, manifest);
  manifest.AddSetting("bins", flags.bins.Describe());
  manifest.AddInput("hyp", flags.hyp);
  manifest.AddInput("ref", flags.ref);
  const auto hyps = LoadCorpus(flags.hyp, flags.text, threads);
  const auto refs = LoadCorpus(flags.ref, flags.text, threads);
  CheckSameLength(flags.hyp, hyps.size(), flags.ref, refs.size());
  const LengthBinReport report = BleuByLength(
      hyps, refs, flags.bins.ToSpec(), flags.text.lowercase, threads);

  std::vector<std::vector<std::string>> rows = {
      {"ref_chars", "sentences", "BLEU", "BP"}};
  std::vector<std::string> labels;
  std::vector<double> values;
  for (const LengthBin& bin : report.bins) {
    const std::string name = BinName(bin.lo, bin.hi, bin.hi_inclusive);
    rows.push_back({name, std::to_string(bin.count),
                    bin.bleu ? FormatFixed(bin.bleu->score, 2) : "-",
                    bin.bleu ? FormatFixed(bin.bleu->brevity_penalty, 3)
                             : "-"});
    labels.push_back(name);
    values.push_back(bin.bleu ? bin.bleu->score : 0.0);
  }
  out << AlignedTable(rows);
  WriteIfRequested(flags.paths.csv, LengthBleuCsv(report), "csv", out,
                   manifest);
  WriteIfRequested(flags.paths.json, LengthJson(report), "json", out,
                   manifest);
  if (!flags.paths.svg.empty()) {
    WriteIfRequested(flags.paths.svg,
                     SvgBarChart("BLEU by reference length (characters)",
                                 labels, values),
                     "svg", out, manifest);
  }
}

void RunLengthRatio(const AnalyzeFlags& flags, int threads, std::ostream& out,
                    RunManifest& manifest) {
  RecordTextOptions(flags.text, manifest);
  manifest.AddSetting("bins", flags.bins.Describe());
  manifest.AddInput("hyp", flags.hyp);
  manifest.AddInput("ref", flags.ref);
  std::optional<MergeRuleTable> table;
  if (!flags.rules.empty()) {
    table = LoadRulesFile(flags.rules);
    manifest.AddInput("rules", flags.rules);
  }
  const auto hyps = LoadCorpus(flags.hyp, flags.text, threads);
  const auto refs = LoadCorpus(flags.ref, flags.text, threads);
  CheckSameLength(flags.hyp, hyps.size(), flags.ref, refs.size());
  LengthAnalysisOptions options;
  options.compute_bleu = false;
  options.delta_table = table ? &*table : nullptr;
  options.threads = threads;
  const LengthBinReport report =
      AnalyzeLengths(hyps, refs, flags.bins.ToSpec(), options);

  std::vector<std::vector<std::string>> rows = {
      {"ref_chars", "sentences", "hyp_chars", "ref_chars", "char_ratio",
       "word_ratio"}};
  std::vector<std::string> labels;
  std::vector<double> values;
  for (const LengthBin& bin : report.bins) {
    const std::string name = BinName(bin.lo, bin.hi, bin.hi_inclusive);
    auto fmt = [](const std::optional<double>& v, int digits) {
      return v ? FormatFixed(*v, digits) : std::string("-");
    };
    rows.push_back({name, std::to_string(bin.count),
                    fmt(bin.mean_hyp_chars, 1), fmt(bin.mean_ref_chars, 1),
                    fmt(bin.char_ratio, 3), fmt(bin.word_ratio, 3)});
    labels.push_back(name);
    values.push_back(bin.char_ratio.value_or(0.0));
  }
  out << AlignedTable(rows);
  out << "overall char_ratio="
      << (report.char_ratio ? FormatFixed(*report.char_ratio, 3) : "-")
      << " word_ratio="
      << (report.word_ratio ? FormatFixed(*report.word_ratio, 3) : "-")
      << " empty_hypotheses=" << report.empty_hypotheses << '\n';
  WriteIfRequested(flags.paths.csv, LengthRatioCsv(report), "csv", out,
                   manifest);
  WriteIfRequested(flags.paths.json, LengthJson(report), "json", out,
                   manifest);
  if (!flags.paths.svg.empty()) {
    WriteIfRequested(
        flags.paths.svg,
        SvgBarChart("Output/reference length ratio (characters)", labels,
                    values),
        "svg", out, manifest);
  }
}

void RunSegDelta(const AnalyzeFlags& flags, int threads, std::ostream& out,
                 RunManifest& manifest) {
  if (flags.rules.empty()) throw InvalidArgument("seg-delta needs --rules");
  manifest.AddSetting("bins", flags.bins.Describe());
  manifest.AddInput("rules", flags.rules);
  manifest.AddInput("ref", flags.ref);
  const MergeRuleTable table = LoadRulesFile(flags.rules);
  const auto refs = LoadPretokenized(flags.ref);
  const DeltaReport report =
      SegLengthDeltas(refs, table, flags.bins.ToSpec(), threads);

  std::vector<std::vector<std::string>> rows = {
      {"ref_chars", "sentences", "mean_delta"}};
  std::vector<std::string> labels;
  std::vector<double> values;
  for (size_t i = 0; i < report.bins.bin_count(); ++i) {
    const std::string name =
        BinName(report.bins.edges[i], report.bins.edges[i + 1],
                i + 1 == report.bins.bin_count());
    const auto& mean = report.bin_means[i];
    rows.push_back({name, std::to_string(report.bin_counts[i]),
                    mean ? FormatFixed(*mean, 3) : "-"});
    labels.push_back(name);
    values.push_back(mean.value_or(0.0));
  }
  out << AlignedTable(rows);
  out << "mean DELTA = " << FormatFixed(report.mean, 6) << '\n';
  WriteIfRequested(flags.paths.csv, DeltaCsv(report), "csv", out, manifest);
  WriteIfRequested(flags.paths.json, DeltaJson(report), "json", out,
                   manifest);
  if (!flags.paths.svg.empty()) {
    WriteIfRequested(
        flags.paths.svg,
        SvgBarChart("Char minus BPE tokens by reference length", labels,
                    values),
        "svg", out, manifest);
  }
}

void RunPeakiness(const AnalyzeFlags& flags, std::ostream& out,
                  RunManifest& manifest) {
  if (flags.log.empty()) throw InvalidArgument("peakiness needs --log");
  manifest.AddSetting("bin_width", FormatFixed(flags.bin_width, 6));
  manifest.AddInput("log", flags.log);
  std::vector<TokenProbabilities> log;
  if (flags.log == kStdStream) {
    log = ReadProbabilityLog(std::cin);
  } else {
    std::ifstream in(flags.log, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + flags.log);
    log = ReadProbabilityLog(in);
  }
  const PeakinessHistogram histogram =
      BuildPeakinessHistogram(log, flags.bin_width);

  out << "tokens=" << histogram.total() << " bins=" << histogram.bin_count();
  if (histogram.total() > 0) {
    const size_t mode = histogram.mode_bin();
    out << " mode=[" << FormatFixed(histogram.bin_lo(mode), 2) << ","
        << FormatFixed(histogram.bin_hi(mode), 2) << "]";
  }
  out << '\n';
  WriteIfRequested(flags.paths.csv, PeakinessCsv(histogram), "csv", out,
                   manifest);
  WriteIfRequested(flags.paths.json, PeakinessJson(histogram), "json", out,
                   manifest);
  if (!flags.paths.svg.empty()) {
    std::vector<std::string> labels;
    std::vector<double> values;
    for (size_t i = 0; i < histogram.bin_count(); ++i) {
      labels.push_back(FormatFixed(histogram.bin_lo(i), 2));
      values.push_back(static_cast<double>(histogram.counts()[i]));
    }
    WriteIfRequested(flags.paths.svg,
                     SvgBarChart("Token probability histogram", labels,
                                 values),
                     "svg", out, manifest);
  }
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kMismatch:
      return kExitMismatch;
    case ErrorKind::kMalformed:
      return kExitMalformed;
    case ErrorKind::kInvalidArgument:
      return kExitUsage;
  }
  return kExitUsage;
}

std::vector<PreprocessStep> BuildSteps(const std::vector<std::string>& names,
                                       bool strip_parens,
                                       const std::string& parens_position,
                                       bool asr, bool no_deescape) {
  std::vector<PreprocessStep> steps;
  if (!names.empty()) {
    for (const std::string& name : names) steps.push_back(ParseStep(name));
    return steps;
  }
  if (!no_deescape) steps.push_back(PreprocessStep::kDeescape);
  if (strip_parens && parens_position == "before") {
    steps.push_back(PreprocessStep::kStripParentheticals);
  }
  steps.push_back(PreprocessStep::kTokenize);
  if (strip_parens && parens_position == "after") {
    steps.push_back(PreprocessStep::kStripParentheticals);
  }
  if (asr) steps.push_back(PreprocessStep::kNormalizeAsr);
  return steps;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Segmentation, metric and analysis toolkit for translation "
               "outputs",
               "segeval");
  app.require_subcommand(1);
  app.set_version_flag("--version", ToolkitVersion());
  app.set_config("--config", "", "Read options from an INI/TOML file");

  GlobalOptions global;
  app.add_option("--threads", global.threads,
                 "Worker threads (0 = all cores; SEGEVAL_THREADS overrides)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--manifest", global.manifest, "Write a run manifest (JSON)");

  auto fallthrough = [](CLI::App* cmd) { cmd->fallthrough(); };

  // preprocess
  IoOptions pre_io;
  std::string pre_lang = "en";
  std::vector<std::string> pre_steps;
  bool strip_parens = false;
  std::string parens_position = "before";
  bool asr = false;
  bool no_deescape = false;
  auto* preprocess = app.add_subcommand("preprocess",
                                        "Deescape and tokenize raw text");
  fallthrough(preprocess);
  preprocess->add_option("input", pre_io.input, "Input file ('-' = stdin)")
      ->capture_default_str();
  preprocess->add_option("-o,--output", pre_io.output, "Output file")
      ->capture_default_str();
  preprocess->add_option("--lang", pre_lang, "Language code")
      ->capture_default_str();
  auto* steps_opt =
      preprocess
          ->add_option("--steps", pre_steps,
                       "Explicit step list: deescape, strip-parens, tokenize, "
                       "asr-normalize")
          ->delimiter(',');
  preprocess->add_flag("--strip-parens", strip_parens,
                       "Remove parenthesized spans")
      ->excludes(steps_opt);
  preprocess
      ->add_option("--parens-position", parens_position,
                   "Strip parentheses before or after tokenizing")
      ->check(CLI::IsMember({"before", "after"}))
      ->capture_default_str();
  preprocess->add_flag("--asr", asr, "Lowercase and drop punctuation tokens")
      ->excludes(steps_opt);
  preprocess->add_flag("--no-deescape", no_deescape, "Skip entity deescaping")
      ->excludes(steps_opt);

  // learn-bpe
  LearnFlags learn;
  auto* learn_bpe = app.add_subcommand("learn-bpe", "Learn BPE merge rules");
  fallthrough(learn_bpe);
  learn_bpe->add_option("inputs", learn.inputs, "Tokenized training text")
      ->required();
  learn_bpe->add_option("-o,--output", learn.output, "Rules file")
      ->capture_default_str();
  learn_bpe
      ->add_option("--merges", learn.merges,
                   "Number of merges (default 8000, 20000 with --joint)")
      ->check(CLI::NonNegativeNumber);
  learn_bpe->add_option("--min-frequency", learn.min_frequency,
                        "Stop once the best pair is rarer than this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  learn_bpe->add_flag("--joint", learn.joint,
                      "Learn one table over several corpora");

  // apply-bpe
  IoOptions apply_io;
  std::string apply_rules;
  auto* apply_bpe = app.add_subcommand("apply-bpe", "Segment words into BPE");
  fallthrough(apply_bpe);
  apply_bpe->add_option("input", apply_io.input, "Tokenized text")
      ->capture_default_str();
  apply_bpe->add_option("-o,--output", apply_io.output, "Output file")
      ->capture_default_str();
  apply_bpe->add_option("--rules", apply_rules, "Rules file")->required();

  // segment-chars
  IoOptions chars_io;
  auto* segment_chars =
      app.add_subcommand("segment-chars", "Segment text into characters");
  fallthrough(segment_chars);
  segment_chars->add_option("input", chars_io.input, "Tokenized text")
      ->capture_default_str();
  segment_chars->add_option("-o,--output", chars_io.output, "Output file")
      ->capture_default_str();

  // unsegment
  IoOptions unseg_io;
  std::string unseg_scheme = "bpe";
  auto* unsegment =
      app.add_subcommand("unsegment", "Restore words from segmented text");
  fallthrough(unsegment);
  unsegment->add_option("input", unseg_io.input, "Segmented text")
      ->capture_default_str();
  unsegment->add_option("-o,--output", unseg_io.output, "Output file")
      ->capture_default_str();
  unsegment->add_option("--scheme", unseg_scheme, "bpe or char")
      ->check(CLI::IsMember({"bpe", "char"}))
      ->capture_default_str();

  // vocab-stats
  std::string vocab_input = kStdStream;
  std::string vocab_scheme = "bpe";
  std::string vocab_json;
  auto* vocab_stats =
      app.add_subcommand("vocab-stats", "Vocabulary size of segmented text");
  fallthrough(vocab_stats);
  vocab_stats->add_option("input", vocab_input, "Segmented text")
      ->capture_default_str();
  vocab_stats->add_option("--scheme", vocab_scheme, "bpe or char")
      ->check(CLI::IsMember({"bpe", "char"}))
      ->capture_default_str();
  vocab_stats->add_option("--json", vocab_json, "JSON report path");

  // score bleu|ter
  ScoreFlags bleu_flags;
  ScoreFlags ter_flags;
  auto* score = app.add_subcommand("score", "Corpus BLEU or TER");
  fallthrough(score);
  score->require_subcommand(1);
  auto* score_bleu = score->add_subcommand("bleu", "Corpus BLEU");
  auto* score_ter = score->add_subcommand("ter", "Corpus TER");
  for (auto [cmd, flags] : {std::pair{score_bleu, &bleu_flags},
                            std::pair{score_ter, &ter_flags}}) {
    fallthrough(cmd);
    cmd->add_option("--hyp", flags->hyp, "Hypothesis file")->required();
    cmd->add_option("--ref", flags->ref, "Reference file")->required();
    cmd->add_option("--json", flags->json, "JSON report path");
    AddTextOptions(cmd, flags->text, cmd == score_bleu);
  }
  AddTerFlags(score_ter, ter_flags.ter);

  // compare
  CompareFlags cmp;
  auto* compare = app.add_subcommand(
      "compare", "Per-sentence TER winners of two systems");
  fallthrough(compare);
  compare->add_option("--hyp-a", cmp.hyp_a, "System A output")->required();
  compare->add_option("--hyp-b", cmp.hyp_b, "System B output")->required();
  compare->add_option("--ref", cmp.ref, "Reference file")->required();
  compare->add_option("--label-a", cmp.label_a, "Name of system A")
      ->capture_default_str();
  compare->add_option("--label-b", cmp.label_b, "Name of system B")
      ->capture_default_str();
  compare->add_option("--csv", cmp.csv, "Group CSV path");
  compare->add_option("--json", cmp.json, "JSON report path");
  compare->add_option("--tsv", cmp.tsv, "Per-sentence TSV path");
  compare->add_option("--table", cmp.table, "Winner table CSV path");
  AddTextOptions(compare, cmp.text, false);
  AddTerFlags(compare, cmp.ter);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Length and peakiness analyses");
  fallthrough(analyze);
  analyze->require_subcommand(1);
  AnalyzeFlags length_bleu_flags;
  AnalyzeFlags length_ratio_flags;
  AnalyzeFlags delta_flags;
  AnalyzeFlags peak_flags;
  auto* length_bleu =
      analyze->add_subcommand("length-bleu", "BLEU by reference length");
  auto* length_ratio = analyze->add_subcommand(
      "length-ratio", "Output vs reference length by reference length");
  auto* seg_delta = analyze->add_subcommand(
      "seg-delta", "Char minus BPE token counts of the references");
  auto* peakiness = analyze->add_subcommand(
      "peakiness", "Histogram of decoded token probabilities");
  for (auto [cmd, flags] : {std::pair{length_bleu, &length_bleu_flags},
                            std::pair{length_ratio, &length_ratio_flags}}) {
    fallthrough(cmd);
    cmd->add_option("--hyp", flags->hyp, "Hypothesis file")->required();
    cmd->add_option("--ref", flags->ref, "Reference file")->required();
    AddTextOptions(cmd, flags->text);
    AddBinFlags(cmd, flags->bins);
    AddReportPaths(cmd, flags->paths);
  }
  length_ratio->add_option("--rules", length_ratio_flags.rules,
                           "Rules file for per-bin DELTA");
  fallthrough(seg_delta);
  seg_delta->add_option("--ref", delta_flags.ref, "Tokenized references")
      ->required();
  seg_delta->add_option("--rules", delta_flags.rules, "Rules file")
      ->required();
  AddBinFlags(seg_delta, delta_flags.bins);
  AddReportPaths(seg_delta, delta_flags.paths);
  fallthrough(peakiness);
  peakiness->add_option("--log", peak_flags.log, "Probability log (JSONL)")
      ->required();
  peakiness->add_option("--bin-width", peak_flags.bin_width, "Bin width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddReportPaths(peakiness, peak_flags.paths);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    const int threads = ResolveThreads(global.threads);
    std::string command;
    for (const CLI::App* sub = app.get_subcommands().front(); sub != nullptr;
         sub = sub->get_subcommands().empty()
                   ? nullptr
                   : sub->get_subcommands().front()) {
      if (!command.empty()) command += ' ';
      command += sub->get_name();
    }
    RunManifest manifest(command);

    if (preprocess->parsed()) {
      PreprocessOptions options;
      options.lang = pre_lang;
      options.steps = BuildSteps(pre_steps, strip_parens, parens_position,
                                 asr, no_deescape);
      RunPreprocess(pre_io, options, threads, out, err, manifest);
    } else if (learn_bpe->parsed()) {
      RunLearnBpe(learn, out, err, manifest);
    } else if (apply_bpe->parsed()) {
      RunApplyBpe(apply_io, apply_rules, threads, out, manifest);
    } else if (segment_chars->parsed()) {
      RunSegmentChars(chars_io, threads, out, manifest);
    } else if (unsegment->parsed()) {
      RunUnsegment(unseg_io, ParseScheme(unseg_scheme), threads, out,
                   manifest);
    } else if (vocab_stats->parsed()) {
      RunVocabStats(vocab_input, ParseScheme(vocab_scheme), vocab_json, out,
                    manifest);
    } else if (score_bleu->parsed()) {
      RunScoreBleu(bleu_flags, threads, out, manifest);
    } else if (score_ter->parsed()) {
      RunScoreTer(ter_flags, threads, out, manifest);
    } else if (compare->parsed()) {
      RunCompare(cmp, threads, out, manifest);
    } else if (length_bleu->parsed()) {
      RunLengthBleu(length_bleu_flags, threads, out, manifest);
    } else if (length_ratio->parsed()) {
      RunLengthRatio(length_ratio_flags, threads, out, manifest);
    } else if (seg_delta->parsed()) {
      RunSegDelta(delta_flags, threads, out, manifest);
    } else if (peakiness->parsed()) {
      RunPeakiness(peak_flags, out, manifest);
    }

    if (!global.manifest.empty()) {
      WriteText(global.manifest, manifest.ToJson(), out);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "segeval: error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "segeval: error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace segeval::cli
