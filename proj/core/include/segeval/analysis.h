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

#ifndef SEGEVAL_ANALYSIS_H_
#define SEGEVAL_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segeval/bleu.h"
#include "segeval/preprocess.h"
#include "segeval/segment.h"

// Post-hoc analyses: BLEU and output length by reference-length bin, the
// char-vs-BPE token count difference of references, and histograms of the
// probabilities of decoded tokens.
namespace segeval {

inline constexpr int kDefaultQuantileBins = 5;
inline constexpr double kDefaultPeakinessBinWidth = 0.05;

// Either explicit ascending edges over reference character counts, or a
// number of quantile bins computed from the data.
struct LengthBinSpec {
  std::vector<int64_t> edges;
  int quantiles = 0;

  static LengthBinSpec Quantiles(int q);
  static LengthBinSpec Edges(std::vector<int64_t> edges);
};

// Bins are [edges[i], edges[i+1]) except the last, which is closed.
struct LengthBins {
  std::vector<int64_t> edges;
  std::vector<size_t> assignment;  // bin index per sentence

  size_t bin_count() const { return edges.size() - 1; }
};

// Characters (code points) of a line once whitespace runs are collapsed to
// single spaces; spaces count.
int64_t CharLength(std::string_view line);
int64_t CharLength(const TokenizedLine& line);

// Quantile q over n sorted lengths uses the inner edges sorted[floor(k*n/q)]
// for k = 1..q-1 plus min and max; duplicated edges are merged, so heavily
// tied data can yield fewer than q bins. Explicit edges must be strictly
// increasing and cover every length. q = 1 gives one bin over all sentences.
LengthBins AssignBins(const std::vector<int64_t>& lengths,
                      const LengthBinSpec& spec);
LengthBins AssignBins(const std::vector<std::string>& refs,
                      const LengthBinSpec& spec);

struct LengthBin {
  int64_t lo = 0;
  int64_t hi = 0;
  bool hi_inclusive = false;
  int64_t count = 0;
  std::optional<BleuReport> bleu;  // absent for an empty bin
  int64_t hyp_chars = 0;
  int64_t ref_chars = 0;
  int64_t hyp_words = 0;
  int64_t ref_words = 0;
  std::optional<double> mean_hyp_chars;
  std::optional<double> mean_ref_chars;
  std::optional<double> char_ratio;  // hyp_chars / ref_chars
  std::optional<double> word_ratio;
  std::optional<double> mean_delta;
};

struct LengthBinReport {
  std::vector<LengthBin> bins;
  std::vector<size_t> assignment;
  int64_t sentences = 0;
  int64_t hyp_chars = 0;
  int64_t ref_chars = 0;
  int64_t hyp_words = 0;
  int64_t ref_words = 0;
  std::optional<double> char_ratio;
  std::optional<double> word_ratio;
  int64_t empty_hypotheses = 0;
  std::vector<int64_t> deltas;  // per sentence, when a merge table is given
};

struct LengthAnalysisOptions {
  bool compute_bleu = true;
  bool lowercase = false;
  // When set, per-sentence and per-bin DELTA are filled in.
  const MergeRuleTable* delta_table = nullptr;
  int threads = 1;
};

// Throws Mismatch on differing sizes and InvalidArgument on empty input.
LengthBinReport AnalyzeLengths(const std::vector<TokenizedLine>& hyps,
                               const std::vector<TokenizedLine>& refs,
                               const LengthBinSpec& spec,
                               const LengthAnalysisOptions& options = {});

LengthBinReport BleuByLength(const std::vector<TokenizedLine>& hyps,
                             const std::vector<TokenizedLine>& refs,
                             const LengthBinSpec& spec, bool lowercase = false,
                             int threads = 1);

LengthBinReport LengthRatio(const std::vector<TokenizedLine>& hyps,
                            const std::vector<TokenizedLine>& refs,
                            const LengthBinSpec& spec);

// Character-scheme token count minus BPE token count of one reference.
int64_t SegLengthDelta(const TokenizedLine& ref, const MergeRuleTable& table);

struct DeltaReport {
  std::vector<int64_t> deltas;
  LengthBins bins;
  std::vector<std::optional<double>> bin_means;
  std::vector<int64_t> bin_counts;
  double mean = 0.0;
};

// Throws InvalidArgument on an empty corpus.
DeltaReport SegLengthDeltas(const std::vector<TokenizedLine>& refs,
                            const MergeRuleTable& table,
                            const LengthBinSpec& spec, int threads = 1);

struct TokenProbabilities {
  int64_t id = 0;
  std::vector<std::string> tokens;
  std::vector<double> probs;
};

class PeakinessHistogram {
 public:
  // `bin_width` must divide 1 into a whole number of bins.
  explicit PeakinessHistogram(double bin_width = kDefaultPeakinessBinWidth);

  // Adds the probabilities of one sentence. Throws InvalidArgument naming the
  // sentence id and position of any value outside [0, 1].
  void Add(const TokenProbabilities& sentence);
  void Add(double probability);

  // Bin of p: floor(p / width), with 1.0 in the last bin.
  size_t BinOf(double probability) const;

  double bin_width() const { return bin_width_; }
  size_t bin_count() const { return counts_.size(); }
  const std::vector<int64_t>& counts() const { return counts_; }
  int64_t total() const { return total_; }
  // Index of the fullest bin; ties go to the lowest index.
  size_t mode_bin() const;
  double bin_lo(size_t bin) const;
  double bin_hi(size_t bin) const;

  // Fraction of all probabilities inside the bins spanning [lo, hi]. Both
  // bounds must lie on bin edges and lo < hi.
  double CumulativeMass(double lo, double hi) const;

 private:
  size_t EdgeIndex(double edge) const;

  double bin_width_;
  std::vector<int64_t> counts_;
  std::vector<int64_t> prefix_;  // prefix_[k] = sum of counts_[0, k)
  int64_t total_ = 0;
};

PeakinessHistogram BuildPeakinessHistogram(
    const std::vector<TokenProbabilities>& log,
    double bin_width = kDefaultPeakinessBinWidth);

}  // namespace segeval

#endif  // SEGEVAL_ANALYSIS_H_
