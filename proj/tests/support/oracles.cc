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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>

namespace segeval::oracle {

std::vector<std::string> Utf8Chars(const std::string& word) {
  std::vector<std::string> out;
  for (size_t i = 0; i < word.size();) {
    const auto lead = static_cast<unsigned char>(word[i]);
    size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    out.push_back(word.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<Pair> BruteForceBpe(const std::map<std::string, int64_t>& words,
                                int n_merges, int min_frequency) {
  std::vector<std::pair<std::vector<std::string>, int64_t>> vocab;
  for (const auto& [word, count] : words) {
    std::vector<std::string> symbols = Utf8Chars(word);
    symbols.back() += "</w>";
    vocab.emplace_back(symbols, count);
  }
  std::vector<Pair> rules;
  while (static_cast<int>(rules.size()) < n_merges) {
    std::map<Pair, int64_t> stats;
    for (const auto& [symbols, count] : vocab) {
      for (size_t i = 0; i + 1 < symbols.size(); ++i) {
        stats[{symbols[i], symbols[i + 1]}] += count;
      }
    }
    if (stats.empty()) break;
    // std::map iterates pairs in ascending order; >= keeps the greatest.
    const Pair* best = nullptr;
    int64_t best_count = 0;
    for (const auto& [pair, count] : stats) {
      if (count >= best_count) {
        best = &pair;
        best_count = count;
      }
    }
    if (best_count < min_frequency) break;
    const Pair chosen = *best;
    rules.push_back(chosen);
    for (auto& [symbols, count] : vocab) {
      std::vector<std::string> merged;
      for (size_t i = 0; i < symbols.size(); ++i) {
        if (i + 1 < symbols.size() && symbols[i] == chosen.first &&
            symbols[i + 1] == chosen.second) {
          merged.push_back(chosen.first + chosen.second);
          ++i;
        } else {
          merged.push_back(symbols[i]);
        }
      }
      symbols = merged;
    }
  }
  return rules;
}

NgramCounts BruteForceNgrams(const std::vector<std::string>& hyp,
                             const std::vector<std::string>& ref) {
  auto grams = [](const std::vector<std::string>& words, size_t n) {
    std::map<std::string, int64_t> out;
    for (size_t i = 0; i + n <= words.size(); ++i) {
      std::string key;
      for (size_t k = 0; k < n; ++k) key += words[i + k] + '\x1f';
      ++out[key];
    }
    return out;
  };
  NgramCounts counts;
  counts.hyp_length = static_cast<int64_t>(hyp.size());
  counts.ref_length = static_cast<int64_t>(ref.size());
  for (size_t n = 1; n <= 4; ++n) {
    const auto h = grams(hyp, n);
    const auto r = grams(ref, n);
    for (const auto& [gram, count] : h) {
      counts.totals[n - 1] += count;
      const auto it = r.find(gram);
      if (it != r.end()) counts.matches[n - 1] += std::min(count, it->second);
    }
  }
  return counts;
}

double ClosedFormBleu(const NgramCounts& c) {
  double log_sum = 0.0;
  for (int n = 0; n < 4; ++n) {
    if (c.matches[n] == 0 || c.totals[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(c.matches[n]) /
                        static_cast<double>(c.totals[n]));
  }
  const double bp =
      c.hyp_length < c.ref_length
          ? std::exp(1.0 - static_cast<double>(c.ref_length) /
                               static_cast<double>(c.hyp_length))
          : 1.0;
  return 100.0 * bp * std::exp(log_sum / 4.0);
}

int64_t Levenshtein(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int64_t>> d(a.size() + 1,
                                      std::vector<int64_t>(b.size() + 1));
  for (size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int64_t>(i);
  for (size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

std::vector<int> MoveSpan(const std::vector<int>& seq, size_t start,
                          size_t length, size_t destination) {
  std::vector<int> span(seq.begin() + start, seq.begin() + start + length);
  std::vector<int> rest;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i < start || i >= start + length) rest.push_back(seq[i]);
  }
  rest.insert(rest.begin() + destination, span.begin(), span.end());
  return rest;
}

bool BestSingleShift(const std::vector<int>& hyp, const std::vector<int>& ref,
                     int max_span, int max_distance, OracleShift& best) {
  const int64_t base = Levenshtein(hyp, ref);
  best = OracleShift{};
  auto occurs_in_ref = [&](size_t start, size_t length) {
    for (size_t j = 0; j + length <= ref.size(); ++j) {
      if (std::equal(hyp.begin() + start, hyp.begin() + start + length,
                     ref.begin() + j)) {
        return true;
      }
    }
    return false;
  };
  for (size_t s = 0; s < hyp.size(); ++s) {
    for (size_t len = 1; s + len <= hyp.size() &&
                         len <= static_cast<size_t>(max_span);
         ++len) {
      if (!occurs_in_ref(s, len)) continue;
      for (size_t d = 0; d + len <= hyp.size(); ++d) {
        if (d == s) continue;
        const int64_t distance = d > s ? d - s : s - d;
        if (distance > max_distance) continue;
        const int64_t reduction =
            base - Levenshtein(MoveSpan(hyp, s, len, d), ref);
        if (reduction > best.reduction) best = {s, len, d, reduction};
      }
    }
  }
  return best.reduction > 0;
}

}  // namespace segeval::oracle
