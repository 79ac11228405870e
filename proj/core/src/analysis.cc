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

#include "segeval/analysis.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>

#include "segeval/error.h"
#include "segeval/parallel.h"
#include "segeval/unicode.h"

namespace segeval {
namespace {

constexpr double kEdgeTolerance = 1e-9;

std::vector<int64_t> QuantileEdges(std::vector<int64_t> lengths, int q) {
  std::sort(lengths.begin(), lengths.end());
  const size_t n = lengths.size();
  std::vector<int64_t> edges{lengths.front()};
  for (int k = 1; k < q; ++k) {
    edges.push_back(lengths[static_cast<size_t>(k) * n / static_cast<size_t>(q)]);
  }
  edges.push_back(lengths.back());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() == 1) edges.push_back(edges.front());  // one closed bin
  return edges;
}

size_t FindBin(const std::vector<int64_t>& edges, int64_t length) {
  if (length < edges.front() || length > edges.back()) {
    throw InvalidArgument("reference length " + std::to_string(length) +
                          " lies outside the bin edges [" +
                          std::to_string(edges.front()) + ", " +
                          std::to_string(edges.back()) + "]");
  }
  const size_t bins = edges.size() - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), length);
  const size_t index = static_cast<size_t>(std::distance(edges.begin(), it)) - 1;
  return std::min(index, bins - 1);
}

std::optional<double> Ratio(int64_t num, int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

void CheckParallel(size_t hyps, size_t refs) {
  if (hyps != refs) {
    throw Mismatch("hypothesis corpus has " + std::to_string(hyps) +
                   " lines but reference corpus has " + std::to_string(refs));
  }
  if (refs == 0) throw InvalidArgument("length analysis needs a non-empty corpus");
}

}  // namespace

LengthBinSpec LengthBinSpec::Quantiles(int q) {
  LengthBinSpec spec;
  spec.quantiles = q;
  return spec;
}

LengthBinSpec LengthBinSpec::Edges(std::vector<int64_t> edges) {
  LengthBinSpec spec;
  spec.edges = std::move(edges);
  return spec;
}

int64_t CharLength(std::string_view line) {
  return static_cast<int64_t>(
      unicode::CodePointCount(unicode::CollapseWhitespace(line)));
}

int64_t CharLength(const TokenizedLine& line) {
  int64_t length = line.tokens.empty()
                       ? 0
                       : static_cast<int64_t>(line.tokens.size()) - 1;
  for (const std::string& token : line.tokens) {
    length += static_cast<int64_t>(unicode::CodePointCount(token));
  }
  return length;
}

LengthBins AssignBins(const std::vector<int64_t>& lengths,
                      const LengthBinSpec& spec) {
  if (lengths.empty()) throw InvalidArgument("cannot bin an empty corpus");
  LengthBins bins;
  if (!spec.edges.empty()) {
    if (spec.edges.size() < 2) {
      throw InvalidArgument("explicit bin edges need at least two values");
    }
    for (size_t i = 1; i < spec.edges.size(); ++i) {
      if (spec.edges[i] <= spec.edges[i - 1]) {
        throw InvalidArgument("bin edges must be strictly increasing");
      }
    }
    bins.edges = spec.edges;
  } else if (spec.quantiles >= 1) {
    bins.edges = QuantileEdges(lengths, spec.quantiles);
  } else {
    throw InvalidArgument("length bin spec needs edges or a quantile count");
  }
  bins.assignment.reserve(lengths.size());
  for (int64_t length : lengths) {
    bins.assignment.push_back(FindBin(bins.edges, length));
  }
  return bins;
}

LengthBins AssignBins(const std::vector<std::string>& refs,
                      const LengthBinSpec& spec) {
  std::vector<int64_t> lengths;
  lengths.reserve(refs.size());
  for (const std::string& ref : refs) lengths.push_back(CharLength(ref));
  return AssignBins(lengths, spec);
}

LengthBinReport AnalyzeLengths(const std::vector<TokenizedLine>& hyps,
                               const std::vector<TokenizedLine>& refs,
                               const LengthBinSpec& spec,
                               const LengthAnalysisOptions& options) {
  CheckParallel(hyps.size(), refs.size());
  const size_t n = refs.size();

  std::vector<int64_t> ref_chars(n), hyp_chars(n);
  for (size_t i = 0; i < n; ++i) {
    ref_chars[i] = CharLength(refs[i]);
    hyp_chars[i] = CharLength(hyps[i]);
  }
  LengthBins bins = AssignBins(ref_chars, spec);

  LengthBinReport report;
  report.sentences = static_cast<int64_t>(n);
  report.bins.resize(bins.bin_count());
  for (size_t b = 0; b < bins.bin_count(); ++b) {
    report.bins[b].lo = bins.edges[b];
    report.bins[b].hi = bins.edges[b + 1];
    report.bins[b].hi_inclusive = b + 1 == bins.bin_count();
  }

  if (options.delta_table != nullptr) {
    report.deltas.resize(n);
    ParallelFor(n, options.threads, [&](size_t i) {
      report.deltas[i] = SegLengthDelta(refs[i], *options.delta_table);
    });
  }

  std::vector<std::vector<size_t>> members(bins.bin_count());
  std::vector<int64_t> delta_sums(bins.bin_count(), 0);
  for (size_t i = 0; i < n; ++i) {
    const size_t b = bins.assignment[i];
    LengthBin& bin = report.bins[b];
    members[b].push_back(i);
    ++bin.count;
    bin.hyp_chars += hyp_chars[i];
    bin.ref_chars += ref_chars[i];
    bin.hyp_words += static_cast<int64_t>(hyps[i].tokens.size());
    bin.ref_words += static_cast<int64_t>(refs[i].tokens.size());
    if (hyps[i].tokens.empty()) ++report.empty_hypotheses;
    if (!report.deltas.empty()) delta_sums[b] += report.deltas[i];
  }

  for (size_t b = 0; b < bins.bin_count(); ++b) {
    LengthBin& bin = report.bins[b];
    report.hyp_chars += bin.hyp_chars;
    report.ref_chars += bin.ref_chars;
    report.hyp_words += bin.hyp_words;
    report.ref_words += bin.ref_words;
    if (bin.count == 0) continue;
    const double count = static_cast<double>(bin.count);
    bin.mean_hyp_chars = static_cast<double>(bin.hyp_chars) / count;
    bin.mean_ref_chars = static_cast<double>(bin.ref_chars) / count;
    bin.char_ratio = Ratio(bin.hyp_chars, bin.ref_chars);
    bin.word_ratio = Ratio(bin.hyp_words, bin.ref_words);
    if (!report.deltas.empty()) {
      bin.mean_delta = static_cast<double>(delta_sums[b]) / count;
    }
    if (options.compute_bleu) {
      std::vector<TokenizedLine> bin_hyps, bin_refs;
      bin_hyps.reserve(members[b].size());
      bin_refs.reserve(members[b].size());
      for (size_t i : members[b]) {
        bin_hyps.push_back(hyps[i]);
        bin_refs.push_back(refs[i]);
      }
      bin.bleu =
          CorpusBleu(bin_hyps, bin_refs, options.lowercase, options.threads);
    }
  }
  report.char_ratio = Ratio(report.hyp_chars, report.ref_chars);
  report.word_ratio = Ratio(report.hyp_words, report.ref_words);
  report.assignment = std::move(bins.assignment);
  return report;
}

LengthBinReport BleuByLength(const std::vector<TokenizedLine>& hyps,
                             const std::vector<TokenizedLine>& refs,
                             const LengthBinSpec& spec, bool lowercase,
                             int threads) {
  LengthAnalysisOptions options;
  options.lowercase = lowercase;
  options.threads = threads;
  return AnalyzeLengths(hyps, refs, spec, options);
}

LengthBinReport LengthRatio(const std::vector<TokenizedLine>& hyps,
                            const std::vector<TokenizedLine>& refs,
                            const LengthBinSpec& spec) {
  LengthAnalysisOptions options;
  options.compute_bleu = false;
  return AnalyzeLengths(hyps, refs, spec, options);
}

int64_t SegLengthDelta(const TokenizedLine& ref, const MergeRuleTable& table) {
  return static_cast<int64_t>(SegmentChars(ref).tokens.size()) -
         static_cast<int64_t>(ApplyBpe(table, ref).tokens.size());
}

DeltaReport SegLengthDeltas(const std::vector<TokenizedLine>& refs,
                            const MergeRuleTable& table,
                            const LengthBinSpec& spec, int threads) {
  if (refs.empty()) throw InvalidArgument("DELTA needs a non-empty corpus");
  DeltaReport report;
  report.deltas.resize(refs.size());
  ParallelFor(refs.size(), threads, [&](size_t i) {
    report.deltas[i] = SegLengthDelta(refs[i], table);
  });

  std::vector<int64_t> lengths;
  lengths.reserve(refs.size());
  for (const TokenizedLine& ref : refs) lengths.push_back(CharLength(ref));
  report.bins = AssignBins(lengths, spec);

  const size_t bin_count = report.bins.bin_count();
  std::vector<int64_t> sums(bin_count, 0);
  report.bin_counts.assign(bin_count, 0);
  int64_t total = 0;
  for (size_t i = 0; i < refs.size(); ++i) {
    const size_t b = report.bins.assignment[i];
    sums[b] += report.deltas[i];
    ++report.bin_counts[b];
    total += report.deltas[i];
  }
  report.bin_means.resize(bin_count);
  for (size_t b = 0; b < bin_count; ++b) {
    if (report.bin_counts[b] > 0) {
      report.bin_means[b] = static_cast<double>(sums[b]) /
                            static_cast<double>(report.bin_counts[b]);
    }
  }
  report.mean = static_cast<double>(total) / static_cast<double>(refs.size());
  return report;
}

PeakinessHistogram::PeakinessHistogram(double bin_width) : bin_width_(bin_width) {
  if (!(bin_width > 0.0) || bin_width > 1.0) {
    throw InvalidArgument("histogram bin width must lie in (0, 1]");
  }
  const double bins = std::round(1.0 / bin_width);
  if (std::abs(bins * bin_width - 1.0) > kEdgeTolerance) {
    throw InvalidArgument("histogram bin width must divide 1 evenly");
  }
  counts_.assign(static_cast<size_t>(bins), 0);
  prefix_.assign(counts_.size() + 1, 0);
}

size_t PeakinessHistogram::BinOf(double probability) const {
  const double scaled = probability * static_cast<double>(counts_.size());
  // Values within rounding error of an upper edge belong to the next bin.
  const auto bin = static_cast<size_t>(std::floor(scaled + kEdgeTolerance));
  return std::min(bin, counts_.size() - 1);
}

void PeakinessHistogram::Add(double probability) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw InvalidArgument("probability " + std::to_string(probability) +
                          " outside [0, 1]");
  }
  const size_t bin = BinOf(probability);
  ++counts_[bin];
  for (size_t k = bin + 1; k < prefix_.size(); ++k) ++prefix_[k];
  ++total_;
}

void PeakinessHistogram::Add(const TokenProbabilities& sentence) {
  for (size_t i = 0; i < sentence.probs.size(); ++i) {
    const double p = sentence.probs[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidArgument("sentence " + std::to_string(sentence.id) +
                            ", position " + std::to_string(i) +
                            ": probability " + std::to_string(p) +
                            " outside [0, 1]");
    }
  }
  for (double p : sentence.probs) Add(p);
}

size_t PeakinessHistogram::mode_bin() const {
  return static_cast<size_t>(std::distance(
      counts_.begin(), std::max_element(counts_.begin(), counts_.end())));
}

double PeakinessHistogram::bin_lo(size_t bin) const {
  return static_cast<double>(bin) / static_cast<double>(counts_.size());
}

double PeakinessHistogram::bin_hi(size_t bin) const {
  return static_cast<double>(bin + 1) / static_cast<double>(counts_.size());
}

size_t PeakinessHistogram::EdgeIndex(double edge) const {
  const double scaled = edge * static_cast<double>(counts_.size());
  const double index = std::round(scaled);
  if (std::abs(scaled - index) > kEdgeTolerance || index < 0.0 ||
      index > static_cast<double>(counts_.size())) {
    throw InvalidArgument("bound " + std::to_string(edge) +
                          " is not a histogram bin edge");
  }
  return static_cast<size_t>(index);
}

double PeakinessHistogram::CumulativeMass(double lo, double hi) const {
  const size_t from = EdgeIndex(lo);
  const size_t to = EdgeIndex(hi);
  if (from >= to) throw InvalidArgument("cumulative mass needs lo < hi");
  if (total_ == 0) throw InvalidArgument("histogram is empty");
  return static_cast<double>(prefix_[to] - prefix_[from]) /
         static_cast<double>(total_);
}

PeakinessHistogram BuildPeakinessHistogram(
    const std::vector<TokenProbabilities>& log, double bin_width) {
  PeakinessHistogram histogram(bin_width);
  for (const TokenProbabilities& sentence : log) histogram.Add(sentence);
  return histogram;
}

}  // namespace segeval
