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

#include "cli/reports.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace segeval::cli {
namespace {

using Json = nlohmann::ordered_json;

Json Optional(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::string FormatOptional(const std::optional<double>& value,
                           int digits = 6) {
  return value ? FormatFixed(*value, digits) : std::string();
}

Json BleuObject(const BleuReport& report) {
  Json out;
  out["score"] = report.score;
  out["precisions"] = report.precisions;
  out["brevity_penalty"] = report.brevity_penalty;
  out["length_ratio"] = report.length_ratio;
  out["matches"] = report.stats.matches;
  out["totals"] = report.stats.totals;
  out["hyp_length"] = report.stats.hyp_length;
  out["ref_length"] = report.stats.ref_length;
  out["degenerate"] = report.degenerate;
  return out;
}

Json TerObject(const TerAlignment& ter) {
  Json out;
  out["score"] = ter.ref_length > 0 ? Json(ter.score()) : Json(nullptr);
  out["edits"] = ter.edits();
  out["insertions"] = ter.insertions;
  out["deletions"] = ter.deletions;
  out["substitutions"] = ter.substitutions;
  out["shifts"] = ter.shifts;
  out["ref_length"] = ter.ref_length;
  return out;
}

Json GroupObject(const WinnerGroup& group) {
  Json out;
  out["count"] = group.count;
  out["mean_ter_a"] = Optional(group.mean_ter_a);
  out["mean_ter_b"] = Optional(group.mean_ter_b);
  out["pooled_ter_a"] = TerObject(group.pooled_a);
  out["pooled_ter_b"] = TerObject(group.pooled_b);
  return out;
}

std::optional<double> PooledScore(const TerAlignment& ter) {
  if (ter.ref_length == 0) return std::nullopt;
  return ter.score();
}

std::string_view WinnerName(Winner w) {
  switch (w) {
    case Winner::kSystemA:
      return "a";
    case Winner::kSystemB:
      return "b";
    case Winner::kTie:
      return "tie";
  }
  return "tie";
}

std::string BinLabel(int64_t lo, int64_t hi, bool inclusive) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) +
         (inclusive ? "]" : ")");
}

Json LengthBinObject(const LengthBin& bin) {
  Json out;
  out["lo"] = bin.lo;
  out["hi"] = bin.hi;
  out["hi_inclusive"] = bin.hi_inclusive;
  out["count"] = bin.count;
  out["bleu"] = bin.bleu ? BleuObject(*bin.bleu) : Json(nullptr);
  out["hyp_chars"] = bin.hyp_chars;
  out["ref_chars"] = bin.ref_chars;
  out["hyp_words"] = bin.hyp_words;
  out["ref_words"] = bin.ref_words;
  out["mean_hyp_chars"] = Optional(bin.mean_hyp_chars);
  out["mean_ref_chars"] = Optional(bin.mean_ref_chars);
  out["char_ratio"] = Optional(bin.char_ratio);
  out["word_ratio"] = Optional(bin.word_ratio);
  out["mean_delta"] = Optional(bin.mean_delta);
  return out;
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string FormatFixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string BleuJson(const BleuReport& report) {
  return Dump(BleuObject(report));
}

std::string TerJson(const TerAlignment& ter) { return Dump(TerObject(ter)); }

std::string WinnerJson(const WinnerReport& report, const std::string& label_a,
                       const std::string& label_b) {
  Json out;
  out["label_a"] = label_a;
  out["label_b"] = label_b;
  out["sentences"] = report.winners.size();
  out["a_wins"] = GroupObject(report.a_wins);
  out["b_wins"] = GroupObject(report.b_wins);
  out["ties"] = GroupObject(report.ties);
  out["total_a"] = TerObject(report.total_a);
  out["total_b"] = TerObject(report.total_b);
  out["win_percent_a"] = report.win_percent_a;
  out["win_percent_b"] = report.win_percent_b;
  out["tie_percent"] = report.tie_percent;
  return Dump(out);
}

std::string WinnerCsv(const WinnerReport& report) {
  std::ostringstream out;
  out << "group,count,mean_ter_a,mean_ter_b,pooled_ter_a,pooled_ter_b\n";
  const std::pair<const char*, const WinnerGroup*> groups[] = {
      {"a_wins", &report.a_wins},
      {"b_wins", &report.b_wins},
      {"ties", &report.ties}};
  for (const auto& [name, group] : groups) {
    out << name << ',' << group->count << ','
        << FormatOptional(group->mean_ter_a) << ','
        << FormatOptional(group->mean_ter_b) << ','
        << FormatOptional(PooledScore(group->pooled_a)) << ','
        << FormatOptional(PooledScore(group->pooled_b)) << '\n';
  }
  out << "total," << report.winners.size() << ",,,"
      << FormatOptional(PooledScore(report.total_a)) << ','
      << FormatOptional(PooledScore(report.total_b)) << '\n';
  return out.str();
}

std::string WinnerTableCsv(const WinnerReport& report,
                           const std::string& label_a,
                           const std::string& label_b) {
  std::ostringstream out;
  out << "system," << label_a << " Winner," << label_b
      << " Winner,Tie,Total,% Win\n";
  auto row = [&](const std::string& label, bool is_a) {
    auto mean = [is_a](const WinnerGroup& g) {
      return FormatOptional(is_a ? g.mean_ter_a : g.mean_ter_b, 2);
    };
    const TerAlignment& total = is_a ? report.total_a : report.total_b;
    out << label << ',' << mean(report.a_wins) << ',' << mean(report.b_wins)
        << ',' << mean(report.ties) << ','
        << FormatOptional(PooledScore(total), 2) << ','
        << FormatFixed(is_a ? report.win_percent_a : report.win_percent_b, 2)
        << '\n';
  };
  row(label_a, true);
  row(label_b, false);
  return out.str();
}

std::string WinnerTableText(const WinnerReport& report,
                            const std::string& label_a,
                            const std::string& label_b) {
  const std::vector<std::string> header = {
      "", label_a + " Winner", label_b + " Winner", "Tie", "Total", "% Win"};
  std::vector<std::vector<std::string>> rows = {header};
  for (bool is_a : {true, false}) {
    auto mean = [is_a](const WinnerGroup& g) {
      const auto& v = is_a ? g.mean_ter_a : g.mean_ter_b;
      return v ? FormatFixed(*v, 1) : std::string("-");
    };
    const TerAlignment& total = is_a ? report.total_a : report.total_b;
    const auto pooled = PooledScore(total);
    rows.push_back(
        {is_a ? label_a : label_b, mean(report.a_wins), mean(report.b_wins),
         mean(report.ties), pooled ? FormatFixed(*pooled, 1) : "-",
         FormatFixed(is_a ? report.win_percent_a : report.win_percent_b, 1)});
  }
  std::vector<size_t> widths(header.size(), 0);
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c) {
      widths[c] = std::max(widths[c], r[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c) {
      if (c > 0) out << "  ";
      const size_t pad = widths[c] - r[c].size();
      if (c == 0) {
        out << r[c] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << r[c];
      }
    }
    out << '\n';
  }
  out << "ties: " << FormatFixed(report.tie_percent, 1) << "% of "
      << report.winners.size() << " sentences\n";
  return out.str();
}

std::string WinnerTsv(const WinnerReport& report) {
  std::ostringstream out;
  out << "id\tter_a\tter_b\twinner\n";
  for (size_t i = 0; i < report.winners.size(); ++i) {
    out << (i + 1) << '\t' << FormatFixed(report.sentences_a[i].score())
        << '\t' << FormatFixed(report.sentences_b[i].score()) << '\t'
        << WinnerName(report.winners[i]) << '\n';
  }
  return out.str();
}

std::string LengthBleuCsv(const LengthBinReport& report) {
  std::ostringstream out;
  out << "bin,lo,hi,count,bleu,bp,hyp_words,ref_words\n";
  for (size_t i = 0; i < report.bins.size(); ++i) {
    const LengthBin& bin = report.bins[i];
    out << BinLabel(bin.lo, bin.hi, bin.hi_inclusive) << ',' << bin.lo << ','
        << bin.hi << ',' << bin.count << ','
        << (bin.bleu ? FormatFixed(bin.bleu->score) : "") << ','
        << (bin.bleu ? FormatFixed(bin.bleu->brevity_penalty) : "") << ','
        << bin.hyp_words << ',' << bin.ref_words << '\n';
  }
  return out.str();
}

std::string LengthRatioCsv(const LengthBinReport& report) {
  std::ostringstream out;
  out << "bin,lo,hi,count,mean_hyp_chars,mean_ref_chars,char_ratio,"
         "word_ratio,mean_delta\n";
  for (const LengthBin& bin : report.bins) {
    out << BinLabel(bin.lo, bin.hi, bin.hi_inclusive) << ',' << bin.lo << ','
        << bin.hi << ',' << bin.count << ','
        << FormatOptional(bin.mean_hyp_chars) << ','
        << FormatOptional(bin.mean_ref_chars) << ','
        << FormatOptional(bin.char_ratio) << ','
        << FormatOptional(bin.word_ratio) << ','
        << FormatOptional(bin.mean_delta) << '\n';
  }
  return out.str();
}

std::string LengthJson(const LengthBinReport& report) {
  Json out;
  out["sentences"] = report.sentences;
  out["hyp_chars"] = report.hyp_chars;
  out["ref_chars"] = report.ref_chars;
  out["hyp_words"] = report.hyp_words;
  out["ref_words"] = report.ref_words;
  out["char_ratio"] = Optional(report.char_ratio);
  out["word_ratio"] = Optional(report.word_ratio);
  out["empty_hypotheses"] = report.empty_hypotheses;
  out["bins"] = Json::array();
  for (const LengthBin& bin : report.bins) {
    out["bins"].push_back(LengthBinObject(bin));
  }
  return Dump(out);
}

std::string DeltaCsv(const DeltaReport& report) {
  std::ostringstream out;
  out << "bin,lo,hi,count,mean_delta\n";
  const LengthBins& bins = report.bins;
  for (size_t i = 0; i < bins.bin_count(); ++i) {
    const bool last = i + 1 == bins.bin_count();
    out << BinLabel(bins.edges[i], bins.edges[i + 1], last) << ','
        << bins.edges[i] << ',' << bins.edges[i + 1] << ','
        << report.bin_counts[i] << ',' << FormatOptional(report.bin_means[i])
        << '\n';
  }
  return out.str();
}

std::string DeltaJson(const DeltaReport& report) {
  Json out;
  out["sentences"] = report.deltas.size();
  out["mean_delta"] = report.mean;
  out["edges"] = report.bins.edges;
  out["bin_counts"] = report.bin_counts;
  Json means = Json::array();
  for (const auto& m : report.bin_means) means.push_back(Optional(m));
  out["bin_means"] = means;
  out["deltas"] = report.deltas;
  return Dump(out);
}

std::string PeakinessCsv(const PeakinessHistogram& histogram) {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count,fraction\n";
  for (size_t i = 0; i < histogram.bin_count(); ++i) {
    const int64_t count = histogram.counts()[i];
    const double fraction =
        histogram.total() > 0
            ? static_cast<double>(count) / static_cast<double>(histogram.total())
            : 0.0;
    out << FormatFixed(histogram.bin_lo(i), 4) << ','
        << FormatFixed(histogram.bin_hi(i), 4) << ',' << count << ','
        << FormatFixed(fraction) << '\n';
  }
  return out.str();
}

std::string PeakinessJson(const PeakinessHistogram& histogram) {
  Json out;
  out["bin_width"] = histogram.bin_width();
  out["bins"] = histogram.bin_count();
  out["total"] = histogram.total();
  out["counts"] = histogram.counts();
  if (histogram.total() > 0) {
    const size_t mode = histogram.mode_bin();
    out["mode_bin"] = mode;
    out["mode_lo"] = histogram.bin_lo(mode);
    out["mode_hi"] = histogram.bin_hi(mode);
  } else {
    out["mode_bin"] = nullptr;
  }
  return Dump(out);
}

std::string VocabStatsJson(const VocabStats& stats, Scheme scheme) {
  Json out;
  out["scheme"] = SchemeName(scheme);
  out["distinct_tokens"] = stats.distinct_tokens;
  out["token_count"] = stats.token_count;
  out["type_token_ratio"] = stats.type_token_ratio;
  return Dump(out);
}

std::string SvgBarChart(const std::string& title,
                        const std::vector<std::string>& labels,
                        const std::vector<double>& values) {
  constexpr int kBarWidth = 24;
  constexpr int kGap = 8;
  constexpr int kPlotHeight = 200;
  constexpr int kMargin = 40;
  const int width =
      2 * kMargin + static_cast<int>(values.size()) * (kBarWidth + kGap);
  const int height = kPlotHeight + 2 * kMargin + 40;
  double max_value = 0.0;
  for (double v : values) max_value = std::max(max_value, v);
  if (max_value <= 0.0) max_value = 1.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<text x=\"" << kMargin << "\" y=\"20\" font-size=\"14\">"
      << EscapeXml(title) << "</text>\n";
  const int baseline = kMargin + kPlotHeight;
  out << "<line x1=\"" << kMargin << "\" y1=\"" << baseline << "\" x2=\""
      << width - kMargin << "\" y2=\"" << baseline
      << "\" stroke=\"black\"/>\n";
  for (size_t i = 0; i < values.size(); ++i) {
    const double h = values[i] / max_value * kPlotHeight;
    const int x = kMargin + static_cast<int>(i) * (kBarWidth + kGap);
    out << "<rect x=\"" << x << "\" y=\"" << FormatFixed(baseline - h, 2)
        << "\" width=\"" << kBarWidth << "\" height=\"" << FormatFixed(h, 2)
        << "\" fill=\"steelblue\"><title>"
        << EscapeXml(i < labels.size() ? labels[i] : "") << ": "
        << FormatFixed(values[i], 4) << "</title></rect>\n";
    if (i < labels.size()) {
      out << "<text x=\"" << x << "\" y=\"" << baseline + 14
          << "\" font-size=\"8\" transform=\"rotate(45 " << x << ' '
          << baseline + 14 << ")\">" << EscapeXml(labels[i]) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace segeval::cli
