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

#include "segeval/ter.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string_view>
#include <unordered_map>

#include "segeval/error.h"
#include "segeval/parallel.h"

namespace segeval {
namespace {

using Sequence = std::vector<int32_t>;

struct EncodedPair {
  Sequence hyp;
  Sequence ref;
};

EncodedPair EncodePair(std::span<const std::string> hyp,
                       std::span<const std::string> ref) {
  std::unordered_map<std::string_view, int32_t> ids;
  auto id_of = [&ids](const std::string& token) {
    return ids.try_emplace(token, static_cast<int32_t>(ids.size()))
        .first->second;
  };
  EncodedPair out;
  out.ref.reserve(ref.size());
  out.hyp.reserve(hyp.size());
  for (const std::string& t : ref) out.ref.push_back(id_of(t));
  for (const std::string& t : hyp) out.hyp.push_back(id_of(t));
  return out;
}

// Row-major (n + 1) x (m + 1) table.
class Table {
 public:
  Table(size_t rows, size_t cols) : cols_(cols), cells_(rows * cols) {}
  int32_t* row(size_t i) { return cells_.data() + i * cols_; }
  const int32_t* row(size_t i) const { return cells_.data() + i * cols_; }
  int32_t at(size_t i, size_t j) const { return cells_[i * cols_ + j]; }

 private:
  size_t cols_;
  std::vector<int32_t> cells_;
};

// forward(i, j) = distance between hyp[0, i) and ref[0, j).
Table ForwardTable(const Sequence& hyp, const Sequence& ref) {
  const size_t n = hyp.size(), m = ref.size();
  Table t(n + 1, m + 1);
  for (size_t j = 0; j <= m; ++j) t.row(0)[j] = static_cast<int32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    const int32_t* up = t.row(i - 1);
    int32_t* cur = t.row(i);
    cur[0] = static_cast<int32_t>(i);
    for (size_t j = 1; j <= m; ++j) {
      const int32_t diagonal = up[j - 1] + (hyp[i - 1] != ref[j - 1] ? 1 : 0);
      cur[j] = std::min({up[j] + 1, cur[j - 1] + 1, diagonal});
    }
  }
  return t;
}

// backward(i, j) = distance between hyp[i, n) and ref[j, m).
Table BackwardTable(const Sequence& hyp, const Sequence& ref) {
  const size_t n = hyp.size(), m = ref.size();
  Table t(n + 1, m + 1);
  for (size_t j = 0; j <= m; ++j) t.row(n)[j] = static_cast<int32_t>(m - j);
  for (size_t i = n; i-- > 0;) {
    const int32_t* down = t.row(i + 1);
    int32_t* cur = t.row(i);
    cur[m] = static_cast<int32_t>(n - i);
    for (size_t j = m; j-- > 0;) {
      const int32_t diagonal = down[j + 1] + (hyp[i] != ref[j] ? 1 : 0);
      cur[j] = std::min({down[j] + 1, cur[j + 1] + 1, diagonal});
    }
  }
  return t;
}

template <typename T>
std::vector<T> Shifted(std::span<const T> seq, const Shift& shift) {
  std::vector<T> out;
  out.reserve(seq.size());
  const size_t s = shift.start, len = shift.length, d = shift.destination;
  if (d < s) {
    out.insert(out.end(), seq.begin(), seq.begin() + d);
    out.insert(out.end(), seq.begin() + s, seq.begin() + s + len);
    out.insert(out.end(), seq.begin() + d, seq.begin() + s);
    out.insert(out.end(), seq.begin() + s + len, seq.end());
  } else {
    out.insert(out.end(), seq.begin(), seq.begin() + s);
    out.insert(out.end(), seq.begin() + s + len, seq.begin() + d + len);
    out.insert(out.end(), seq.begin() + s, seq.begin() + s + len);
    out.insert(out.end(), seq.begin() + d + len, seq.end());
  }
  return out;
}

// Only the rows between the first and last position touched by a shift
// change. The distance of the shifted hypothesis is recovered by running the
// forward recurrence over those rows, starting from the cached prefix row,
// and joining with the cached suffix row: D = min_j F[e][j] + B[e][j].
class ShiftSearch {
 public:
  ShiftSearch(const Sequence& hyp, const Sequence& ref)
      : hyp_(hyp),
        ref_(ref),
        forward_(ForwardTable(hyp, ref)),
        backward_(BackwardTable(hyp, ref)),
        base_(forward_.at(hyp.size(), ref.size())),
        row_(ref.size() + 1),
        next_(ref.size() + 1) {}

  int32_t base_distance() const { return base_; }

  int32_t DistanceAfter(const Shift& shift) {
    const size_t s = shift.start, len = shift.length, d = shift.destination;
    const size_t begin = std::min(s, d);
    const size_t end = std::max(s, d) + len;
    const size_t m = ref_.size();
    std::copy(forward_.row(begin), forward_.row(begin) + m + 1, row_.begin());
    size_t i = begin;
    auto step = [&](int32_t symbol) {
      ++i;
      next_[0] = static_cast<int32_t>(i);
      for (size_t j = 1; j <= m; ++j) {
        const int32_t diagonal = row_[j - 1] + (symbol != ref_[j - 1] ? 1 : 0);
        next_[j] = std::min({row_[j] + 1, next_[j - 1] + 1, diagonal});
      }
      row_.swap(next_);
    };
    if (d < s) {
      for (size_t k = s; k < s + len; ++k) step(hyp_[k]);
      for (size_t k = d; k < s; ++k) step(hyp_[k]);
    } else {
      for (size_t k = s + len; k < d + len; ++k) step(hyp_[k]);
      for (size_t k = s; k < s + len; ++k) step(hyp_[k]);
    }
    const int32_t* suffix = backward_.row(end);
    int32_t best = row_[0] + suffix[0];
    for (size_t j = 1; j <= m; ++j) best = std::min(best, row_[j] + suffix[j]);
    return best;
  }

 private:
  const Sequence& hyp_;
  const Sequence& ref_;
  Table forward_;
  Table backward_;
  int32_t base_;
  std::vector<int32_t> row_;
  std::vector<int32_t> next_;
};

std::optional<ShiftCandidate> BestShift(const Sequence& hyp,
                                        const Sequence& ref,
                                        const TerOptions& options) {
  const size_t n = hyp.size(), m = ref.size();
  if (n < 2 || m == 0) return std::nullopt;
  ShiftSearch search(hyp, ref);
  if (search.base_distance() == 0) return std::nullopt;

  const size_t max_span = static_cast<size_t>(std::max(options.max_shift_span, 0));
  const size_t max_distance =
      static_cast<size_t>(std::max(options.max_shift_distance, 0));
  ShiftCandidate best;
  std::vector<size_t> matches;  // ref starts equal to the current hyp span
  for (size_t s = 0; s < n; ++s) {
    matches.clear();
    for (size_t j = 0; j < m; ++j) {
      if (ref[j] == hyp[s]) matches.push_back(j);
    }
    for (size_t len = 1; len <= max_span && s + len <= n; ++len) {
      if (len > 1) {
        const int32_t tail = hyp[s + len - 1];
        std::erase_if(matches, [&](size_t j) {
          return j + len > m || ref[j + len - 1] != tail;
        });
      }
      if (matches.empty()) break;
      for (size_t d = 0; d + len <= n; ++d) {
        if (d == s) continue;
        const size_t displacement = d > s ? d - s : s - d;
        if (displacement > max_distance) continue;
        // Moving a block changes the distance by at most twice the smaller of
        // its length and its displacement.
        const int64_t bound = 2 * static_cast<int64_t>(std::min(len, displacement));
        if (bound <= best.reduction) continue;
        const Shift shift{s, len, d};
        const int64_t reduction =
            search.base_distance() - search.DistanceAfter(shift);
        if (reduction > best.reduction) best = {shift, reduction};
      }
    }
  }
  if (best.reduction <= 0) return std::nullopt;
  return best;
}

TerAlignment CountEdits(const Sequence& hyp, const Sequence& ref) {
  const Table t = ForwardTable(hyp, ref);
  TerAlignment out;
  out.ref_length = static_cast<int64_t>(ref.size());
  size_t i = hyp.size(), j = ref.size();
  while (i > 0 || j > 0) {
    const int32_t here = t.at(i, j);
    if (i > 0 && j > 0) {
      const bool same = hyp[i - 1] == ref[j - 1];
      if (here == t.at(i - 1, j - 1) + (same ? 0 : 1)) {
        if (!same) ++out.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == t.at(i - 1, j) + 1) {
      ++out.insertions;
      --i;
    } else {
      ++out.deletions;
      --j;
    }
  }
  return out;
}

}  // namespace

double TerAlignment::score() const {
  if (ref_length <= 0) return 0.0;
  return 100.0 * static_cast<double>(edits()) / static_cast<double>(ref_length);
}

TerAlignment& TerAlignment::operator+=(const TerAlignment& other) {
  insertions += other.insertions;
  deletions += other.deletions;
  substitutions += other.substitutions;
  shifts += other.shifts;
  ref_length += other.ref_length;
  return *this;
}

std::vector<std::string> ApplyShift(std::span<const std::string> hyp,
                                    const Shift& shift) {
  if (shift.length == 0 || shift.start + shift.length > hyp.size() ||
      shift.destination + shift.length > hyp.size()) {
    throw InvalidArgument("shift out of range");
  }
  return Shifted(hyp, shift);
}

int64_t WordEditDistance(std::span<const std::string> hyp,
                         std::span<const std::string> ref) {
  const EncodedPair e = EncodePair(hyp, ref);
  return ForwardTable(e.hyp, e.ref).at(e.hyp.size(), e.ref.size());
}

std::optional<ShiftCandidate> FindBestShift(std::span<const std::string> hyp,
                                            std::span<const std::string> ref,
                                            const TerOptions& options) {
  const EncodedPair e = EncodePair(hyp, ref);
  return BestShift(e.hyp, e.ref, options);
}

TerAlignment SentenceTer(std::span<const std::string> hyp,
                         std::span<const std::string> ref,
                         const TerOptions& options) {
  if (ref.empty()) throw InvalidArgument("TER needs a non-empty reference");
  EncodedPair e = EncodePair(hyp, ref);
  int64_t shifts = 0;
  while (auto candidate = BestShift(e.hyp, e.ref, options)) {
    e.hyp = Shifted(std::span<const int32_t>(e.hyp), candidate->shift);
    ++shifts;
  }
  TerAlignment out = CountEdits(e.hyp, e.ref);
  out.shifts = shifts;
  return out;
}

std::vector<TerAlignment> SentenceTers(const std::vector<TokenizedLine>& hyps,
                                       const std::vector<TokenizedLine>& refs,
                                       const TerOptions& options, int threads) {
  if (hyps.size() != refs.size()) {
    throw Mismatch("hypothesis corpus has " + std::to_string(hyps.size()) +
                   " lines but reference corpus has " +
                   std::to_string(refs.size()));
  }
  std::vector<TerAlignment> out(hyps.size());
  ParallelFor(hyps.size(), threads, [&](size_t i) {
    if (refs[i].tokens.empty()) {
      throw InvalidArgument("TER needs a non-empty reference (line " +
                            std::to_string(i + 1) + ")");
    }
    out[i] = SentenceTer(hyps[i].tokens, refs[i].tokens, options);
  });
  return out;
}

TerAlignment CorpusTer(const std::vector<TokenizedLine>& hyps,
                       const std::vector<TokenizedLine>& refs,
                       const TerOptions& options, int threads) {
  if (hyps.size() != refs.size()) {
    throw Mismatch("hypothesis corpus has " + std::to_string(hyps.size()) +
                   " lines but reference corpus has " +
                   std::to_string(refs.size()));
  }
  if (hyps.empty()) throw InvalidArgument("TER needs a non-empty corpus");
  TerAlignment total;
  for (const TerAlignment& t : SentenceTers(hyps, refs, options, threads)) {
    total += t;
  }
  return total;
}

std::string FormatTerSummary(const TerAlignment& ter) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "TER = %.2f (ins=%lld, del=%lld, sub=%lld, shift=%lld, "
                "ref_len=%lld)",
                ter.score(), static_cast<long long>(ter.insertions),
                static_cast<long long>(ter.deletions),
                static_cast<long long>(ter.substitutions),
                static_cast<long long>(ter.shifts),
                static_cast<long long>(ter.ref_length));
  return buffer;
}

}  // namespace segeval
