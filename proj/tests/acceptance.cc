// tests/acceptance.cc

// Copyright 2026  The disfleval Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "disfleval/alignment.h"
#include "disfleval/annotation.h"
#include "disfleval/cli.h"
#include "disfleval/corpus.h"
#include "disfleval/frame_metrics.h"
#include "disfleval/fusion.h"
#include "disfleval/io.h"
#include "disfleval/scoring.h"
#include "oracles.h"
#include "random_fixtures.h"

namespace disfleval {
namespace {

namespace fs = std::filesystem;
using testing_util::Rng;

const std::string kMini = std::string(DISFLEVAL_TEST_DATA_DIR) + "/mini/";

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string &why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

std::vector<Segment> LoadMini() {
  std::vector<Segment> out;
  for (const auto &line : ReadLines(kMini + "ref.jsonl"))
    out.push_back(RecordToSegment(ParseCorpusRecord(line.text, "ref"),
                                  CanonMap::Default()));
  return out;
}

Outcome LevenshteinOracle() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string alphabet[] = {"a", "b", "c"};
  std::vector<std::vector<std::string>> seqs;
  for (std::size_t len = 0; len <= 6; ++len) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < len; ++k) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::string> s;
      for (std::size_t k = 0, x = code; k < len; ++k, x /= 3)
        s.push_back(alphabet[x % 3]);
      seqs.push_back(std::move(s));
    }
  }
  std::size_t pairs = 0;
  for (const auto &a : seqs) {
    for (const auto &b : seqs) {
      std::size_t edits = 0;
      for (const auto &op : Align(a, b)) edits += op.kind != EditKind::kMatch;
      if (edits != oracle::EditDistance(a, b)) {
        o.Fail("mismatch at pair " + std::to_string(pairs));
        return o;
      }
      ++pairs;
    }
  }
  const double secs = Seconds(t0);
  std::ostringstream os;
  os << pairs << " pairs, " << secs << " s";
  o.detail = os.str();
  if (secs >= 60.0) o.Fail(os.str() + " (limit 60 s)");
  return o;
}

Outcome WerDecomposition() {
  Outcome o;
  Rng rng(1001);
  EditSummary total;
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::string> ref, hyp;
    std::vector<DisfluencyFlags> flags;
    for (std::size_t k = testing_util::UniformIndex(rng, 1, 25); k > 0; --k) {
      ref.push_back(testing_util::RandomToken(rng, 6));
      flags.push_back(testing_util::RandomFlags(rng, 0.1));
    }
    for (std::size_t k = testing_util::UniformIndex(rng, 0, 25); k > 0; --k)
      hyp.push_back(testing_util::RandomToken(rng, 6));
    EditSummary s = SummarizeEdits(Align(ref, hyp), flags);
    if (s.nwords != s.nwords_d + s.nwords_n ||
        s.Errors() != s.ErrorsNondisfluent() + s.ErrorsDisfluent() ||
        s.ins != s.ins_n || s.del != s.del_d + s.del_n ||
        s.sub != s.sub_d + s.sub_n) {
      o.Fail("identity broken on segment " + std::to_string(t));
      return o;
    }
    total += s;
  }
  std::ostringstream os;
  os << "1000 segments; corpus " << total.Errors() << " = "
     << total.ErrorsNondisfluent() << " + " << total.ErrorsDisfluent();
  o.detail = os.str();
  return o;
}

Outcome FerOracle() {
  Outcome o;
  Rng rng(1002);
  std::uint64_t frames = 0;
  for (int t = 0; t < 1000; ++t) {
    double hop = testing_util::Ms(rng, 0.005, 0.050);
    double win = hop + testing_util::Ms(rng, 0.0, 0.040);
    Segment ref = testing_util::RandomSegment(rng, "s", 15);
    std::vector<Word> hyp = ref.words;
    for (auto &w : hyp) {
      if (testing_util::Coin(rng, 0.3)) w.text = testing_util::RandomToken(rng, 4);
      if (testing_util::Coin(rng, 0.3)) {
        w.start_s = std::max(0.0, w.start_s + testing_util::Ms(rng, -0.05, 0.05));
        w.end_s = std::max(w.start_s, w.end_s + testing_util::Ms(rng, -0.05, 0.05));
      }
    }
    if (testing_util::Coin(rng, 0.2))
      hyp = testing_util::RandomWords(rng, ref.duration_s + 0.1, 10);
    FrameErrorSummary s = ScoreFrames(ref, hyp, FrameGrid(hop, win));
    oracle::FerCounts c = oracle::Fer(ref, hyp, hop, win, false);
    if (s.nframes != c.n || s.nframes_e != c.e || s.nframes_d != c.d ||
        s.nframes_n != c.nd || s.nframes_e_d != c.e_d || s.nframes_e_n != c.e_n) {
      o.Fail("oracle mismatch on segment " + std::to_string(t));
      return o;
    }
    if (s.nframes != s.nframes_d + s.nframes_n ||
        s.nframes_e != s.nframes_e_d + s.nframes_e_n) {
      o.Fail("identity broken on segment " + std::to_string(t));
      return o;
    }
    frames += s.nframes;
  }
  o.detail = "1000 segments, " + std::to_string(frames) + " frames";
  return o;
}

// Word indices (in the normalized segment) that carry class c.
std::set<std::size_t> WithClass(const Segment &s, DisfluencyClass c) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < s.words.size(); ++i)
    if (s.words[i].flags.Has(c)) out.insert(i);
  return out;
}

Outcome TableOneFixtures() {
  Outcome o;
  std::vector<Segment> segs = LoadMini();
  struct Expect {
    const char *id;
    DisfluencyClass cls;
    std::set<std::size_t> span;
  };
  const Expect cases[] = {
      {"sw01", DisfluencyClass::kFilledPause, {1}},
      {"sw02", DisfluencyClass::kPartialWord, {0}},
      {"sw03", DisfluencyClass::kRepetition, {1, 2}},
      {"sw04", DisfluencyClass::kRevision, {2, 3}},
      {"sw05", DisfluencyClass::kRestart, {0, 1}},
  };
  for (const auto &e : cases) {
    const Segment *seg = nullptr;
    for (const auto &s : segs)
      if (s.segment_id == e.id) seg = &s;
    if (seg == nullptr) {
      o.Fail(std::string("missing fixture ") + e.id);
      continue;
    }
    if (WithClass(*seg, e.cls) != e.span)
      o.Fail(std::string(e.id) + ": " + std::string(ClassName(e.cls)) +
             " span differs");
    // No other disfluency class on the underlined span, except the
    // partial word's repetition.
    for (std::size_t i : e.span) {
      DisfluencyFlags want;
      want.Set(e.cls);
      if (e.cls == DisfluencyClass::kPartialWord) want.rp = true;
      if (seg->words[i].flags != want)
        o.Fail(std::string(e.id) + ": word " + std::to_string(i) +
               " has unexpected flags");
    }
  }
  if (o.pass) o.detail = "FP, PW+RP, RP, RV, RS spans exact";
  return o;
}

Outcome WorkedExample() {
  Outcome o;
  CorpusRecord rec = ParseCorpusRecord(
      R"({"segment_id":"x","duration_s":2.2,"words":[)"
      R"({"text":"and","start_s":0.05,"end_s":0.3},)"
      R"({"text":"uh","start_s":0.35,"end_s":0.6},)"
      R"({"text":"we","start_s":0.65,"end_s":0.9,"role":"error"},)"
      R"({"text":"were","start_s":0.95,"end_s":1.2,"role":"error"},)"
      R"({"text":"i","start_s":1.25,"end_s":1.5,"role":"correction"},)"
      R"({"text":"was","start_s":1.55,"end_s":1.8,"role":"correction"},)"
      R"({"text":"fortunate","start_s":1.85,"end_s":2.1}]})",
      "example");
  Segment seg = RecordToSegment(rec, CanonMap::Default());
  const std::vector<std::string> hyp = {"and", "i", "was", "fortunate"};
  EditSummary s = ScoreWords(seg, hyp);
  if (!s.Wer() || *s.Wer() != 3.0 / 7.0) o.Fail("WER != 3/7");
  if (!s.WerDisfluent() || *s.WerDisfluent() != 1.0) o.Fail("WER-D != 1");
  if (!s.WerNondisfluent() || *s.WerNondisfluent() != 0.0) o.Fail("WER-ND != 0");
  if (o.pass) o.detail = "WER 3/7, WER-D 1, WER-ND 0";
  return o;
}

Outcome PerfectPredictor() {
  Outcome o;
  DetectionCounts counts;
  for (const auto &seg : LoadMini()) {
    LabelTrack truth = FrameLabels(seg, FrameGrid());
    counts.Add(truth, truth);
  }
  DetectionReport r = Summarize(counts);
  std::size_t supported = 0;
  for (std::size_t c = 0; c <= kNumClasses; ++c) {
    const Confusion &conf = r.counts.classes[c];
    if (conf.Support() == 0) continue;
    ++supported;
    if (*conf.Recall() != 1.0 || *conf.F1() != 1.0)
      o.Fail("class " + std::to_string(c) + " below 1.0");
  }
  for (auto v : {r.unweighted_recall, r.weighted_recall, r.unweighted_f1,
                 r.weighted_f1})
    if (!v || *v != 1.0) o.Fail("macro below 1.0");
  if (o.pass) o.detail = std::to_string(supported) + " supported classes at 1.0";
  return o;
}

Outcome FusionShapes() {
  Outcome o;
  Rng rng(1007);
  const std::size_t dim = 768;
  std::uint64_t zero_rows = 0;
  for (int t = 0; t < 100; ++t) {
    Segment seg = testing_util::RandomSegment(rng, "s", 12);
    std::vector<WordVector> words;
    for (const auto &w : seg.words) {
      WordVector v{w.text, w.start_s, w.end_s, std::vector<double>(dim)};
      for (double &x : v.vec) x = testing_util::Uniform(rng, 0.1, 1.0);
      words.push_back(std::move(v));
    }
    const FrameGrid grid;
    FeatureMatrix up = UpsampleWordFeatures(words, grid, seg.duration_s, dim);
    FeatureMatrix acoustic(up.rows(), dim);
    for (std::size_t r = 0; r < acoustic.rows(); ++r)
      for (double &x : acoustic.Row(r)) x = testing_util::Uniform(rng, -1, 1);
    FeatureMatrix fused = ConcatStreams(acoustic, up);
    if (fused.dim() != 1536 || fused.rows() != grid.NumFrames(seg.duration_s)) {
      o.Fail("bad shape on segment " + std::to_string(t));
      return o;
    }
    auto expected = oracle::Upsample(words, FrameGrid::kDefaultHop,
                                     FrameGrid::kDefaultWin, seg.duration_s, dim);
    WordProjection proj = ProjectWordsToFrames(seg, grid);
    for (std::size_t r = 0; r < fused.rows(); ++r) {
      auto row = fused.Row(r);
      bool zero = true;
      for (std::size_t c = 0; c < dim; ++c) {
        if (row[c] != acoustic.Row(r)[c]) o.Fail("acoustic columns altered");
        if (row[dim + c] != expected[r][c]) o.Fail("word columns differ from oracle");
        zero = zero && row[dim + c] == 0.0;
      }
      if (zero != !proj.frames[r].has_value())
        o.Fail("zero rows differ from wordless frames");
      zero_rows += zero;
    }
    if (!o.pass) return o;
  }
  o.detail = "100 segments, 1536-dim rows, " + std::to_string(zero_rows) +
             " zero word rows";
  return o;
}

Outcome Determinism() {
  Outcome o;
  const std::string ref = kMini + "ref.jsonl", hyp = kMini + "hyp.jsonl";
  const std::vector<std::vector<std::string>> commands = {
      {"label", "--ref", ref},
      {"stats", "--ref", ref},
      {"wer", "--ref", ref, "--hyp", hyp},
      {"fer", "--ref", ref, "--hyp", hyp},
      {"score", "--ref", ref, "--pred", kMini + "pred_a.jsonl"},
      {"overlap", "--ref", ref, "--pred", kMini + "pred_a.jsonl", "--pred",
       kMini + "pred_b.jsonl", "--pred", kMini + "pred_c.jsonl"},
      {"fuse", "--words", kMini + "words.jsonl", "--frames", kMini + "frames.txt"},
      {"baseline", "--ref", ref},
      {"validate", "--ref", ref, "--hyp", hyp, "--pred", kMini + "pred_b.jsonl"},
  };
  std::size_t checked = 0;
  for (const auto &fmt : {"json", "md"}) {
    for (const auto &cmd : commands) {
      std::string outputs[2], errors[2];
      int codes[2];
      const char *jobs[2] = {"1", "8"};
      for (int k = 0; k < 2; ++k) {
        std::vector<std::string> args = {"--jobs", jobs[k], "--format", fmt};
        args.insert(args.end(), cmd.begin(), cmd.end());
        std::ostringstream out, err;
        codes[k] = RunCli(args, out, err);
        outputs[k] = out.str();
        errors[k] = err.str();
      }
      if (outputs[0] != outputs[1] || errors[0] != errors[1] ||
          codes[0] != codes[1])
        o.Fail(cmd[0] + " (" + fmt + ") differs between --jobs 1 and 8");
      if (codes[0] != 0) o.Fail(cmd[0] + " exited with " + std::to_string(codes[0]));
      if (outputs[0].empty()) o.Fail(cmd[0] + " produced no output");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " runs bit-identical";
  return o;
}

Outcome OverlapPartition() {
  Outcome o;
  auto check = [&](const std::string &name, const LabelTrack &truth,
                   const std::vector<LabelTrack> &preds, bool strict) {
    std::vector<std::span<const DisfluencyFlags>> sys(preds.begin(), preds.end());
    OverlapResult r = AnalyzeOverlap(truth, sys, {strict});
    for (const auto &d : r.diagrams) {
      if (d.Total() == 0) continue;
      double sum = 0;
      for (std::uint32_t m = 0; m < d.mask_counts.size(); ++m) sum += d.Percent(m);
      if (std::fabs(sum - 100.0) > 1e-9)
        o.Fail(name + "/" + d.name + " sums to " + std::to_string(sum));
    }
    return r;
  };

  Rng rng(1009);
  LabelTrack truth(200);
  for (auto &f : truth) f = testing_util::RandomFlags(rng, 0.25);

  OverlapResult all = check("all-correct", truth, {truth, truth, truth}, false);
  for (const auto &d : all.diagrams)
    if (d.Total() > 0 && d.Percent(0b111) != 100.0)
      o.Fail("all-correct " + d.name + " not 100% in triple intersection");

  LabelTrack six(10), rp(10);
  for (std::size_t i = 0; i < 10; ++i) rp[i].rp = true;
  for (std::size_t i = 0; i < 6; ++i) six[i].rp = true;
  OverlapResult r60 = check("six-of-ten", rp, {six, six, six}, false);
  if (r60.diagrams[0].Percent(0b111) != 60.0) o.Fail("six-of-ten not 60%");

  LabelTrack a(10), b(10), c(10);
  for (std::size_t i = 0; i < 10; ++i) (i < 4 ? a : i < 7 ? b : c)[i].rp = true;
  OverlapResult disjoint = check("disjoint", rp, {a, b, c}, false);
  if (disjoint.diagrams[0].Percent(0b001) != 40.0 ||
      disjoint.diagrams[0].Percent(0b010) != 30.0 ||
      disjoint.diagrams[0].Percent(0b100) != 30.0)
    o.Fail("disjoint fixture percentages");

  for (int t = 0; t < 50; ++t) {
    std::vector<LabelTrack> preds(3, LabelTrack(truth.size()));
    for (auto &p : preds)
      for (auto &f : p) f = testing_util::RandomFlags(rng, 0.3);
    check("random", truth, preds, t % 2 == 1);
  }
  if (o.pass) o.detail = "all-correct 100% triple, 60% fixture, 53 partitions sum to 100";
  return o;
}

// Synthetic corpus: 10,000 segments of 10..30 words.
void WriteSyntheticCorpus(const fs::path &dir) {
  Rng rng(1010);
  const char *vocab[] = {"and", "the", "i", "was", "we", "uh", "um", "you",
                         "know", "th-", "so", "it", "that", "like", "well"};
  std::ofstream ref(dir / "ref.jsonl"), hyp(dir / "hyp.jsonl"),
      pa(dir / "pa.jsonl"), pb(dir / "pb.jsonl"), pc(dir / "pc.jsonl");
  for (int s = 0; s < 10000; ++s) {
    const std::size_t n = testing_util::UniformIndex(rng, 10, 30);
    const std::string id = "seg" + std::to_string(s);
    const double step = 0.3;
    const double duration = 0.1 + step * n;
    std::ostringstream r, h, frames_b, frames_c, words_a;
    r << R"({"segment_id":")" << id << R"(","duration_s":)" << duration
      << R"(,"words":[)";
    h << R"({"segment_id":")" << id << R"(","words":[)";
    words_a << R"({"segment_id":")" << id << R"(","words":[)";
    std::size_t k = 0, region = 0;
    bool first_h = true;
    while (k < n) {
      auto emit = [&](const std::string &text, const char *role,
                      const std::string &rid) {
        const double st = 0.05 + step * k, en = st + 0.25;
        r << (k ? "," : "") << R"({"text":")" << text << R"(","start_s":)" << st
          << R"(,"end_s":)" << en << R"(,"role":")" << role << '"';
        if (!rid.empty()) r << R"(,"region_id":")" << rid << '"';
        r << "}";
        if (!testing_util::Coin(rng, 0.1)) {
          std::string ht = testing_util::Coin(rng, 0.1) ? "so" : text;
          h << (first_h ? "" : ",") << R"({"text":")" << ht << R"(","start_s":)"
            << st << R"(,"end_s":)" << en << "}";
          words_a << (first_h ? "" : ",") << R"({"text":")" << ht
                  << R"(","start_s":)" << st << R"(,"end_s":)" << en
                  << R"(,"flags":[)" << (ht == "um" || ht == "uh") << ",0,0,0,0]}";
          first_h = false;
        }
        ++k;
      };
      if (k + 2 <= n && testing_util::Coin(rng, 0.1)) {
        const std::string rid = "r" + std::to_string(++region);
        std::string w = vocab[testing_util::UniformIndex(rng, 0, 14)];
        emit(w, "error", rid);
        emit(testing_util::Coin(rng, 0.5) ? w : "it", "correction", rid);
      } else {
        emit(vocab[testing_util::UniformIndex(rng, 0, 14)], "outside", "");
      }
    }
    r << "]}\n";
    h << "]}\n";
    words_a << "]}\n";
    ref << r.str();
    hyp << h.str();
    pa << words_a.str();
    const std::size_t nframes = FrameGrid().NumFrames(duration);
    for (auto *out : {&pb, &pc}) {
      std::ostringstream p;
      p << R"({"segment_id":")" << id << R"(","frames":[)";
      for (std::size_t f = 0; f < nframes; ++f) {
        p << (f ? "," : "") << "[" << testing_util::Coin(rng, 0.05) << ",0,"
          << testing_util::Coin(rng, 0.05) << ",0,0]";
      }
      p << "]}\n";
      *out << p.str();
    }
  }
}

Outcome Throughput() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "disfleval_acceptance_corpus";
  fs::remove_all(dir);
  fs::create_directories(dir);
  WriteSyntheticCorpus(dir);
  const std::string ref = (dir / "ref.jsonl").string();
  const std::string hyp = (dir / "hyp.jsonl").string();
  const std::vector<std::vector<std::string>> suite = {
      {"stats", "--ref", ref},
      {"wer", "--ref", ref, "--hyp", hyp},
      {"fer", "--ref", ref, "--hyp", hyp},
      {"score", "--ref", ref, "--pred", (dir / "pa.jsonl").string()},
      {"score", "--ref", ref, "--pred", (dir / "pb.jsonl").string()},
      {"overlap", "--ref", ref, "--pred", (dir / "pa.jsonl").string(), "--pred",
       (dir / "pb.jsonl").string(), "--pred", (dir / "pc.jsonl").string()},
  };
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto &cmd : suite) {
    std::vector<std::string> args = {"--jobs", "1"};
    args.insert(args.end(), cmd.begin(), cmd.end());
    std::ostringstream out, err;
    int code = RunCli(args, out, err);
    if (code != 0) o.Fail(cmd[0] + " exited with " + std::to_string(code) + ": " +
                          err.str().substr(0, 200));
  }
  const double secs = Seconds(t0);
  fs::remove_all(dir);
  std::ostringstream os;
  os << "10000 segments, " << suite.size() << " commands, " << secs << " s";
  if (o.pass) o.detail = os.str();
  if (secs >= 10.0) o.Fail(os.str() + " (limit 10 s)");
  return o;
}

}  // namespace
}  // namespace disfleval

int main() {
  using disfleval::Outcome;
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Levenshtein oracle equivalence", disfleval::LevenshteinOracle},
      {"WER decomposition identity", disfleval::WerDecomposition},
      {"FER brute-force equivalence", disfleval::FerOracle},
      {"Disfluency class fixtures", disfleval::TableOneFixtures},
      {"Hand-derived WER example", disfleval::WorkedExample},
      {"Perfect predictor", disfleval::PerfectPredictor},
      {"Fusion shapes", disfleval::FusionShapes},
      {"Determinism across --jobs", disfleval::Determinism},
      {"Overlap partition", disfleval::OverlapPartition},
      {"Throughput", disfleval::Throughput},
  };
  int failures = 0;
  int n = 0;
  for (const auto &c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d: %s  %s (%s)\n", n, o.pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
