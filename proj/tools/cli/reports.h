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

#ifndef SEGEVAL_TOOLS_CLI_REPORTS_H_
#define SEGEVAL_TOOLS_CLI_REPORTS_H_

#include <string>
#include <vector>

#include "segeval/analysis.h"
#include "segeval/bleu.h"
#include "segeval/segment.h"
#include "segeval/ter.h"
#include "segeval/winner.h"

// Serialization of metric and analysis results. JSON objects keep a fixed key
// order and CSV numbers use fixed precision so reports are byte-stable.
namespace segeval::cli {

std::string BleuJson(const BleuReport& report);
std::string TerJson(const TerAlignment& ter);

std::string WinnerJson(const WinnerReport& report, const std::string& label_a,
                       const std::string& label_b);
// group,count,mean_ter_a,mean_ter_b,pooled_ter_a,pooled_ter_b
std::string WinnerCsv(const WinnerReport& report);
// One row per system: "<A> Winner,<B> Winner,Tie,Total,% Win" holding the
// system's average TER in each group, its corpus TER and its win rate.
std::string WinnerTableCsv(const WinnerReport& report,
                           const std::string& label_a,
                           const std::string& label_b);
// Aligned text version of the table above.
std::string WinnerTableText(const WinnerReport& report,
                            const std::string& label_a,
                            const std::string& label_b);
// id,ter_a,ter_b,winner with 1-based ids.
std::string WinnerTsv(const WinnerReport& report);

std::string LengthBleuCsv(const LengthBinReport& report);
std::string LengthRatioCsv(const LengthBinReport& report);
std::string LengthJson(const LengthBinReport& report);

std::string DeltaCsv(const DeltaReport& report);
std::string DeltaJson(const DeltaReport& report);

// bin_lo,bin_hi,count,fraction
std::string PeakinessCsv(const PeakinessHistogram& histogram);
std::string PeakinessJson(const PeakinessHistogram& histogram);

std::string VocabStatsJson(const VocabStats& stats, Scheme scheme);

// Plain SVG bar chart; no external renderer needed.
std::string SvgBarChart(const std::string& title,
                        const std::vector<std::string>& labels,
                        const std::vector<double>& values);

// "%.6f", or empty for a missing value.
std::string FormatFixed(double value, int digits = 6);

}  // namespace segeval::cli

#endif  // SEGEVAL_TOOLS_CLI_REPORTS_H_
