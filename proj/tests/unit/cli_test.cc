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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/manifest.h"

namespace segeval::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("SEGEVAL_THREADS");
    dir_ = fs::temp_directory_path() /
           ("segeval_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& content) {
    std::ofstream(Path(name), std::ios::binary) << content;
    return Path(name);
  }

  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  Result Run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Result r;
    r.status = RunCli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, PreprocessStripsAnnotations) {
  const std::string in = Write("in.txt", "(Laughter) Bonjour.\n");
  const Result r = Run({"preprocess", "--lang", "fr", "--strip-parens", in,
                        "-o", Path("out.txt")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(Read("out.txt"), "Bonjour .\n");
}

TEST_F(CliTest, PreprocessStepsAndStdout) {
  const std::string in = Write("in.txt", "Hello, World &amp; (x) You!\n");
  Result r = Run({"preprocess", in, "--asr", "--strip-parens"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "hello world you\n");
  r = Run({"preprocess", in, "--steps", "tokenize"});
  EXPECT_EQ(r.out, "Hello , World & amp ; ( x ) You !\n");
  r = Run({"preprocess", in, "--steps", "tokenize,deescape"});
  EXPECT_EQ(r.status, kExitUsage);
}

TEST_F(CliTest, PreprocessEmptyFile) {
  const std::string in = Write("empty.txt", "");
  const Result r = Run({"preprocess", in, "-o", Path("out.txt")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(Read("out.txt"), "");
}

TEST_F(CliTest, PreprocessPreservesLineCount) {
  const std::string in = Write("in.txt", "a\n\n(only annotation)\nb.\n");
  const Result r = Run({"preprocess", in, "--strip-parens"});
  EXPECT_EQ(r.out, "a\n\n\nb .\n");
}

TEST_F(CliTest, MissingInputExitsTwoAndNamesPath) {
  const Result r = Run({"preprocess", Path("nope.txt")});
  EXPECT_EQ(r.status, kExitIo);
  EXPECT_NE(r.err.find("nope.txt"), std::string::npos);
}

TEST_F(CliTest, InvalidUtf8NamesLine) {
  const std::string in = Write("bad.txt", "ok\nbad \xff byte\n");
  const Result r = Run({"preprocess", in});
  EXPECT_EQ(r.status, kExitMalformed);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, LearnApplyUnsegment) {
  const std::string corpus = Write("corpus.txt", "low low lowest\n");
  Result r = Run({"learn-bpe", "--merges", "2", "--min-frequency", "1", corpus,
                  "-o", Path("rules.txt")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(Read("rules.txt"), "#version: 0.2\nl o\nlo w</w>\n");

  r = Run({"apply-bpe", "--rules", Path("rules.txt"), corpus, "-o",
           Path("seg.txt")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(Read("seg.txt"), "low low lo@@ w@@ e@@ s@@ t\n");

  r = Run({"unsegment", Path("seg.txt"), "-o", Path("back.txt")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(Read("back.txt"), Read("corpus.txt"));
}

TEST_F(CliTest, SegmentCharsRoundTrip) {
  const std::string corpus = Write("corpus.txt", "héllo world\n\nx\n");
  ASSERT_EQ(Run({"segment-chars", corpus, "-o", Path("chars.txt")}).status, 0);
  EXPECT_EQ(Read("chars.txt"), "h é l l o ▁ w o r l d\n\nx\n");
  ASSERT_EQ(Run({"unsegment", "--scheme", "char", Path("chars.txt"), "-o",
                 Path("back.txt")})
                .status,
            0);
  EXPECT_EQ(Read("back.txt"), Read("corpus.txt"));
}

TEST_F(CliTest, LearnNotesEarlyStop) {
  const std::string corpus = Write("corpus.txt", "low low lowest\n");
  const Result r = Run({"learn-bpe", corpus, "-o", Path("rules.txt")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.err.find("of 8000 merges"), std::string::npos) << r.err;
}

TEST_F(CliTest, JointLearning) {
  const std::string a = Write("a.txt", "low low\n");
  const std::string b = Write("b.txt", "lowest\n");
  Result r = Run({"learn-bpe", "--joint", "--merges", "2", "--min-frequency",
                  "1", a, b});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "#version: 0.2\nl o\nlo w</w>\n");
  r = Run({"learn-bpe", "--joint", a});
  EXPECT_EQ(r.status, kExitUsage);
  r = Run({"learn-bpe", "--joint", a, b});
  EXPECT_NE(r.err.find("of 20000 merges"), std::string::npos) << r.err;
}

TEST_F(CliTest, MalformedRulesNameLine) {
  Write("rules.txt", "#version: 0.2\na b\nnospace\n");
  const std::string in = Write("in.txt", "ab\n");
  const Result r = Run({"apply-bpe", "--rules", Path("rules.txt"), in});
  EXPECT_EQ(r.status, kExitMalformed);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, DanglingContinuationIsMalformed) {
  const std::string in = Write("seg.txt", "a@@ b\nx@@\n");
  const Result r = Run({"unsegment", in});
  EXPECT_EQ(r.status, kExitMalformed);
}

TEST_F(CliTest, VocabStats) {
  const std::string in = Write("chars.txt", "a b ▁ b a\n");
  const Result r = Run({"vocab-stats", "--scheme", "char", in, "--json",
                        Path("stats.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("distinct_tokens=3 token_count=5"), std::string::npos);
  EXPECT_NE(Read("stats.json").find("\"distinct_tokens\": 3"),
            std::string::npos);
}

TEST_F(CliTest, ScoreBleu) {
  const std::string same = Write("same.txt", "a b c d\ne f g h i\n");
  Result r = Run({"score", "bleu", "--hyp", same, "--ref", same});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("BLEU = 100.00,", 0), 0u) << r.out;

  const std::string hyp = Write("hyp.txt", "a b c d\n");
  const std::string ref = Write("ref.txt", "a b c d e\n");
  r = Run({"score", "bleu", "--hyp", hyp, "--ref", ref, "--json",
           Path("bleu.json")});
  EXPECT_EQ(r.out.rfind("BLEU = 77.88,", 0), 0u) << r.out;
  EXPECT_NE(Read("bleu.json").find("\"hyp_length\": 4"), std::string::npos);
}

TEST_F(CliTest, ScoreBleuMtevalVariant) {
  const std::string hyp = Write("hyp.txt", "It's 5. Really, it's fine.\n");
  const Result r = Run({"score", "bleu", "--mteval-tok", "--hyp", hyp,
                        "--ref", hyp});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("hyp_len=10"), std::string::npos) << r.out;
}

TEST_F(CliTest, ScoreTer) {
  const std::string hyp = Write("hyp.txt", "b a c d\n");
  const std::string ref = Write("ref.txt", "a b c d\n");
  const Result r = Run({"score", "ter", "--hyp", hyp, "--ref", ref});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("TER = 25.00", 0), 0u) << r.out;
  EXPECT_EQ(Run({"score", "ter", "--lowercase", "--hyp", hyp, "--ref", ref})
                .status,
            kExitUsage);
}

TEST_F(CliTest, LineCountMismatchExitsThree) {
  const std::string hyp = Write("hyp.txt", "a\nb\nc\n");
  const std::string ref = Write("ref.txt", "a\nb\n");
  const Result r = Run({"score", "bleu", "--hyp", hyp, "--ref", ref});
  EXPECT_EQ(r.status, kExitMismatch);
  EXPECT_NE(r.err.find("3 lines"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("2"), std::string::npos);
}

TEST_F(CliTest, CompareWritesReports) {
  const std::string ref = Write("ref.txt", "a b c d\ne f g h\n");
  const std::string a = Write("a.txt", "a b c d\ne f g x\n");
  const std::string b = Write("b.txt", "a b c x\ne f g x\n");
  const Result r = Run({"compare", "--hyp-a", a, "--hyp-b", b, "--ref", ref,
                        "--label-a", "Char", "--label-b", "BPE", "--csv",
                        Path("groups.csv"), "--json", Path("w.json"), "--tsv",
                        Path("s.tsv"), "--table", Path("table.csv")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Char Winner"), std::string::npos);
  EXPECT_EQ(Read("table.csv").substr(0, Read("table.csv").find('\n')),
            "system,Char Winner,BPE Winner,Tie,Total,% Win");
  EXPECT_NE(Read("table.csv").find("Char,0.00,,25.00,12.50,50.00"),
            std::string::npos)
      << Read("table.csv");
  EXPECT_EQ(Read("groups.csv"),
            "group,count,mean_ter_a,mean_ter_b,pooled_ter_a,pooled_ter_b\n"
            "a_wins,1,0.000000,25.000000,0.000000,25.000000\n"
            "b_wins,0,,,,\n"
            "ties,1,25.000000,25.000000,25.000000,25.000000\n"
            "total,2,,,12.500000,25.000000\n");
  EXPECT_EQ(Read("s.tsv"),
            "id\tter_a\tter_b\twinner\n1\t0.000000\t25.000000\ta\n"
            "2\t25.000000\t25.000000\ttie\n");
  EXPECT_NE(Read("w.json").find("\"win_percent_a\": 50.0"), std::string::npos);
}

TEST_F(CliTest, CompareIdenticalSystemsTie) {
  const std::string ref = Write("ref.txt", "a b\nc d\n");
  const std::string hyp = Write("hyp.txt", "b a\nc x\n");
  const Result r = Run({"compare", "--hyp-a", hyp, "--hyp-b", hyp, "--ref",
                        ref, "--json", Path("w.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(Read("w.json").find("\"tie_percent\": 100.0"), std::string::npos);
}

TEST_F(CliTest, PeakinessCsv) {
  const std::string log = Write(
      "log.jsonl",
      "{\"id\": 0, \"tokens\": [\"a\", \"b\", \"c\"], \"probs\": [0.93, 0.91, 0.5]}\n");
  const Result r = Run({"analyze", "peakiness", "--log", log, "--bin-width",
                        "0.05", "--csv", Path("p.csv"), "--svg",
                        Path("p.svg")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::istringstream csv(Read("p.csv"));
  std::string line;
  std::getline(csv, line);
  std::vector<std::string> counts;
  while (std::getline(csv, line)) {
    std::istringstream fields(line);
    std::string lo, hi, count;
    std::getline(fields, lo, ',');
    std::getline(fields, hi, ',');
    std::getline(fields, count, ',');
    counts.push_back(count);
  }
  ASSERT_EQ(counts.size(), 20u);
  EXPECT_EQ(counts[10], "1");
  EXPECT_EQ(counts[18], "2");
  EXPECT_NE(Read("p.svg").find("<svg"), std::string::npos);
}

TEST_F(CliTest, MalformedLogExitsFourWithRecordNumber) {
  const std::string log = Write(
      "log.jsonl",
      "{\"id\": 0, \"tokens\": [\"a\"], \"probs\": [0.5]}\n{\"id\": 1, \"tokens\": [\"a\"]\n");
  const Result r = Run({"analyze", "peakiness", "--log", log});
  EXPECT_EQ(r.status, kExitMalformed);
  EXPECT_NE(r.err.find("record 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, SingleBinLengthBleuEqualsScore) {
  const std::string hyp = Write("hyp.txt", "a b c d\ne f g h i j\nk l m\n");
  const std::string ref = Write("ref.txt", "a b c d e\ne f g h i j\nk l m n\n");
  ASSERT_EQ(Run({"score", "bleu", "--hyp", hyp, "--ref", ref, "--json",
                 Path("score.json")})
                .status,
            0);
  ASSERT_EQ(Run({"analyze", "length-bleu", "--bins", "1", "--hyp", hyp,
                 "--ref", ref, "--json", Path("bins.json")})
                .status,
            0);
  const std::string score = Read("score.json");
  const std::string bins = Read("bins.json");
  const std::string key = "\"score\": ";
  const auto value = [&key](const std::string& json) {
    const size_t at = json.find(key) + key.size();
    return json.substr(at, json.find_first_of(",\n", at) - at);
  };
  EXPECT_EQ(value(score), value(bins));
}

TEST_F(CliTest, SegDeltaOnLowFixture) {
  Write("rules.txt", "#version: 0.2\nl o\nlo w</w>\n");
  const std::string ref = Write("ref.txt", "low\n");
  const Result r = Run({"analyze", "seg-delta", "--ref", ref, "--rules",
                        Path("rules.txt"), "--bins", "1", "--csv",
                        Path("d.csv")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("mean DELTA = 2.000000"), std::string::npos) << r.out;
}

TEST_F(CliTest, LengthRatio) {
  const std::string hyp = Write("hyp.txt", "abcd\nabcdef\n");
  const std::string ref = Write("ref.txt", "abcdefgh\nabcdefghijkl\n");
  const Result r = Run({"analyze", "length-ratio", "--hyp", hyp, "--ref", ref,
                        "--edges", "0,10,20", "--csv", Path("r.csv")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("overall char_ratio=0.500"), std::string::npos);
  EXPECT_NE(Read("r.csv").find("[0,10),0,10,1,4.000000,8.000000,0.500000"),
            std::string::npos)
      << Read("r.csv");
}

TEST_F(CliTest, ConfigFileMirrorsFlags) {
  const std::string hyp = Write("hyp.txt", "b a c d\n");
  const std::string ref = Write("ref.txt", "a b c d\n");
  const std::string config =
      Write("run.ini", "[score.ter]\nhyp=" + hyp + "\nref=" + ref +
                           "\nmax-shift-distance=0\n");
  const Result r = Run({"--config", config, "score", "ter"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("TER = 50.00", 0), 0u) << r.out;
}

TEST_F(CliTest, ManifestHashIgnoresThreads) {
  const std::string hyp = Write("hyp.txt", "a b c d\n");
  const std::string ref = Write("ref.txt", "a b c d e\n");
  ASSERT_EQ(Run({"--threads", "1", "--manifest", Path("m1.json"), "score",
                 "bleu", "--hyp", hyp, "--ref", ref})
                .status,
            0);
  ASSERT_EQ(Run({"score", "bleu", "--hyp", hyp, "--ref", ref, "--threads",
                 "8", "--manifest", Path("m8.json")})
                .status,
            0);
  auto hash = [this](const std::string& name) {
    const std::string json = Read(name);
    const size_t at = json.find("\"manifest_hash\": \"") + 18;
    return json.substr(at, 64);
  };
  EXPECT_EQ(hash("m1.json"), hash("m8.json"));
  ASSERT_EQ(Run({"--manifest", Path("m2.json"), "score", "bleu", "--lowercase",
                 "--hyp", hyp, "--ref", ref})
                .status,
            0);
  EXPECT_NE(hash("m1.json"), hash("m2.json"));
}

TEST_F(CliTest, EnvironmentOverridesThreads) {
  setenv("SEGEVAL_THREADS", "zero", 1);
  const std::string in = Write("in.txt", "a\n");
  EXPECT_EQ(Run({"segment-chars", in}).status, kExitUsage);
  setenv("SEGEVAL_THREADS", "3", 1);
  EXPECT_EQ(Run({"segment-chars", in}).status, kExitOk);
  unsetenv("SEGEVAL_THREADS");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}).status, kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(Run({"score", "bleu", "--hyp", "x"}).status, kExitUsage);
  EXPECT_EQ(Run({"--help"}).status, kExitOk);
}

}  // namespace
}  // namespace segeval::cli
