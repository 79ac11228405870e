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

#include "segeval/bleu.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string_view>
#include <unordered_map>

#include "segeval/error.h"
#include "segeval/parallel.h"
#include "segeval/unicode.h"

namespace segeval {
namespace {

// Sentence-local integer ids for the tokens of one hypothesis/reference pair.
struct LocalIds {
  std::vector<uint32_t> hyp;
  std::vector<uint32_t> ref;
  size_t vocabulary = 0;
};

LocalIds AssignIds(std::span<const std::string> hyp,
                   std::span<const std::string> ref, bool lowercase) {
  std::vector<std::string> lowered;
  std::unordered_map<std::string_view, uint32_t> ids;
  LocalIds out;
  if (lowercase) lowered.reserve(hyp.size() + ref.size());
  auto id_of = [&](const std::string& token) {
    std::string_view key = token;
    if (lowercase) key = lowered.emplace_back(unicode::ToLower(token));
    auto [it, inserted] = ids.try_emplace(key, static_cast<uint32_t>(ids.size()));
    return it->second;
  };
  for (const std::string& t : ref) out.ref.push_back(id_of(t));
  for (const std::string& t : hyp) out.hyp.push_back(id_of(t));
  out.vocabulary = ids.size();
  return out;
}

// With fewer than 2^16 local types an n-gram of order <= 4 packs losslessly
// into 64 bits; otherwise the id vector itself is the key.
template <typename Map, typename MakeKey>
void CountMatches(const LocalIds& ids, MakeKey make_key, BleuStats& stats) {
  for (int n = 1; n <= kBleuMaxOrder; ++n) {
    Map ref_counts;
    for (size_t i = 0; i + n <= ids.ref.size(); ++i) {
      ++ref_counts[make_key(ids.ref, i, n)];
    }
    Map hyp_counts;
    for (size_t i = 0; i + n <= ids.hyp.size(); ++i) {
      ++hyp_counts[make_key(ids.hyp, i, n)];
    }
    int64_t matched = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    stats.matches[n - 1] += matched;
    if (ids.hyp.size() >= static_cast<size_t>(n)) {
      stats.totals[n - 1] += static_cast<int64_t>(ids.hyp.size()) - n + 1;
    }
  }
}

}  // namespace

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  return *this;
}

BleuStats SentenceBleuStats(std::span<const std::string> hyp,
                            std::span<const std::string> ref, bool lowercase) {
  BleuStats stats;
  stats.hyp_length = static_cast<int64_t>(hyp.size());
  stats.ref_length = static_cast<int64_t>(ref.size());
  const LocalIds ids = AssignIds(hyp, ref, lowercase);
  if (ids.vocabulary < (1u << 16)) {
    CountMatches<std::unordered_map<uint64_t, int64_t>>(
        ids,
        [](const std::vector<uint32_t>& seq, size_t at, int n) {
          uint64_t key = 0;
          for (int k = 0; k < n; ++k) key = (key << 16) | seq[at + k];
          return key;
        },
        stats);
  } else {
    CountMatches<std::map<std::vector<uint32_t>, int64_t>>(
        ids,
        [](const std::vector<uint32_t>& seq, size_t at, int n) {
          return std::vector<uint32_t>(seq.begin() + at, seq.begin() + at + n);
        },
        stats);
  }
  return stats;
}

BleuReport BleuFromStats(const BleuStats& stats) {
  BleuReport report;
  report.stats = stats;
  double log_sum = 0.0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    if (stats.totals[n] == 0 || stats.matches[n] == 0) {
      report.degenerate = true;
      report.precisions[n] =
          stats.totals[n] == 0 ? 0.0
                               : static_cast<double>(stats.matches[n]) /
                                     static_cast<double>(stats.totals[n]);
      continue;
    }
    report.precisions[n] = static_cast<double>(stats.matches[n]) /
                           static_cast<double>(stats.totals[n]);
    log_sum += std::log(report.precisions[n]);
  }

  if (stats.ref_length > 0) {
    report.length_ratio = static_cast<double>(stats.hyp_length) /
                          static_cast<double>(stats.ref_length);
  }
  if (stats.hyp_length >= stats.ref_length) {
    report.brevity_penalty = 1.0;
  } else if (stats.hyp_length == 0) {
    report.brevity_penalty = 0.0;
  } else {
    report.brevity_penalty =
        std::exp(1.0 - static_cast<double>(stats.ref_length) /
                           static_cast<double>(stats.hyp_length));
  }

  report.score = report.degenerate
                     ? 0.0
                     : 100.0 * report.brevity_penalty *
                           std::exp(log_sum / kBleuMaxOrder);
  return report;
}

BleuReport CorpusBleu(const std::vector<TokenizedLine>& hyps,
                      const std::vector<TokenizedLine>& refs, bool lowercase,
                      int threads) {
  if (hyps.size() != refs.size()) {
    throw Mismatch("hypothesis corpus has " + std::to_string(hyps.size()) +
                   " lines but reference corpus has " +
                   std::to_string(refs.size()));
  }
  if (hyps.empty()) throw InvalidArgument("BLEU needs a non-empty corpus");
  std::vector<BleuStats> per_sentence(hyps.size());
  ParallelFor(hyps.size(), threads, [&](size_t i) {
    per_sentence[i] =
        SentenceBleuStats(hyps[i].tokens, refs[i].tokens, lowercase);
  });
  BleuStats total;
  for (const BleuStats& s : per_sentence) total += s;
  return BleuFromStats(total);
}

std::string FormatBleuSummary(const BleuReport& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "BLEU = %.2f, %.1f/%.1f/%.1f/%.1f (BP=%.3f, ratio=%.3f, "
                "hyp_len=%lld, ref_len=%lld)",
                report.score, 100.0 * report.precisions[0],
                100.0 * report.precisions[1], 100.0 * report.precisions[2],
                100.0 * report.precisions[3], report.brevity_penalty,
                report.length_ratio,
                static_cast<long long>(report.stats.hyp_length),
                static_cast<long long>(report.stats.ref_length));
  return buffer;
}

}  // namespace segeval
