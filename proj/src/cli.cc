// src/cli.cc

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

#include "disfleval/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "CLI11.hpp"
#include "disfleval/alignment.h"
#include "disfleval/annotation.h"
#include "disfleval/baseline_tagger.h"
#include "disfleval/frame_metrics.h"
#include "disfleval/fusion.h"
#include "disfleval/io.h"
#include "disfleval/parallel.h"
#include "disfleval/report.h"
#include "disfleval/scoring.h"

namespace disfleval {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct Options {
  double hop = FrameGrid::kDefaultHop;
  double win = FrameGrid::kDefaultWin;
  std::string canon_map;
  std::string format = "json";
  std::string out;
  bool fer_ignore_silence = false;
  bool overlap_strict = false;
  bool strict = false;
  std::size_t jobs = 1;

  std::string ref, hyp;
  std::vector<std::string> preds;
  std::vector<std::string> names;
  std::string words, frames;
  std::optional<double> duration;
  std::optional<std::size_t> word_dim;
  std::size_t max_span = 3;
};

// Everything a subcommand needs once options are resolved.
struct Context {
  const Options &opt;
  FrameGrid grid;
  CanonMap canon;
  ReportFormat format;
  std::ostream &out;
  std::ostream &err;
  Diagnostics diags;
};

void PrintDiagnostics(const Diagnostics &diags, std::ostream &err) {
  for (const auto &d : diags) {
    err << "disfleval: "
        << (d.severity == Severity::kError ? "error" : "warning") << ": ";
    if (!d.segment_id.empty()) err << "segment '" << d.segment_id << "': ";
    err << d.message << '\n';
  }
}

std::string Where(const std::string &path, std::size_t lineno) {
  return path + ":" + std::to_string(lineno);
}

// Writes the report to --out or the output stream.
void Emit(Context &ctx, const std::string &text) {
  if (ctx.opt.out.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream os(ctx.opt.out, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + ctx.opt.out + "'");
  os << text;
}

// Final step shared by corpus commands.
int Finish(Context &ctx, const std::function<std::string()> &render) {
  PrintDiagnostics(ctx.diags, ctx.err);
  const bool errors = HasErrors(ctx.diags);
  if (errors && ctx.opt.strict) {
    ctx.err << "disfleval: aborting because of errors (--strict)\n";
    return kExitValidation;
  }
  Emit(ctx, render());
  return errors ? kExitValidation : kExitOk;
}

struct RefCorpus {
  std::vector<Segment> segments;
  std::size_t total = 0;
  std::size_t rejected = 0;
};

// Parses, labels and validates every reference segment. Rejected segments
// are reported and left out.
RefCorpus LoadReference(Context &ctx) {
  const std::vector<NumberedLine> lines = ReadLines(ctx.opt.ref);
  std::vector<std::optional<Segment>> slots(lines.size());
  std::vector<Diagnostics> local(lines.size());
  ParallelFor(lines.size(), ctx.opt.jobs, [&](std::size_t i) {
    const std::string where = Where(ctx.opt.ref, lines[i].lineno);
    try {
      CorpusRecord rec = ParseCorpusRecord(lines[i].text, where);
      Segment seg = RecordToSegment(rec, ctx.canon, &local[i]);
      if (ValidateSegment(seg, &local[i])) slots[i] = std::move(seg);
    } catch (const FormatError &e) {
      Error(&local[i], "", e.what());
    } catch (const AnnotationError &e) {
      Error(&local[i], "", where + ": " + e.what());
    }
  });

  RefCorpus corpus;
  corpus.total = lines.size();
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (auto &d : local[i]) ctx.diags.push_back(std::move(d));
    if (!slots[i]) {
      ++corpus.rejected;
      continue;
    }
    if (!seen.insert(slots[i]->segment_id).second) {
      Error(&ctx.diags, slots[i]->segment_id,
            Where(ctx.opt.ref, lines[i].lineno) + ": duplicate segment_id");
      ++corpus.rejected;
      continue;
    }
    corpus.segments.push_back(std::move(*slots[i]));
  }
  return corpus;
}

std::unordered_set<std::string> IdsOf(const RefCorpus &corpus) {
  std::unordered_set<std::string> ids;
  for (const auto &s : corpus.segments) ids.insert(s.segment_id);
  return ids;
}

// Keyed records from a hypothesis or prediction file. Records for unknown
// segments are listed and skipped; duplicates are errors.
template <typename Record, typename ParseFn>
std::unordered_map<std::string, Record> LoadKeyed(
    Context &ctx, const std::string &path,
    const std::unordered_set<std::string> &known, const char *what,
    ParseFn parse) {
  std::unordered_map<std::string, Record> out;
  for (const auto &line : ReadLines(path)) {
    const std::string where = Where(path, line.lineno);
    try {
      Record rec = parse(line.text, where);
      const std::string id = rec.segment_id;
      if (!known.count(id)) {
        Warn(&ctx.diags, id,
             where + ": " + what + " has no reference segment; skipped");
        continue;
      }
      if (!out.emplace(id, std::move(rec)).second)
        Error(&ctx.diags, id, where + ": duplicate segment_id");
    } catch (const FormatError &e) {
      Error(&ctx.diags, "", e.what());
    }
  }
  return out;
}

std::unordered_map<std::string, HypRecord> LoadHyps(
    Context &ctx, const std::unordered_set<std::string> &known) {
  return LoadKeyed<HypRecord>(ctx, ctx.opt.hyp, known, "hypothesis",
                              ParseHypRecord);
}

std::unordered_map<std::string, PredictionTrack> LoadPreds(
    Context &ctx, const std::string &path,
    const std::unordered_set<std::string> &known) {
  return LoadKeyed<PredictionTrack>(ctx, path, known, "prediction",
                                    ParsePrediction);
}

// Maps fn over segments in parallel, then merges results and diagnostics in
// reference order. fn returns std::nullopt to skip a segment.
template <typename Result, typename Fn>
Result MapReduce(Context &ctx, const std::vector<Segment> &segments,
                 RunInfo *info, Fn fn) {
  std::vector<std::optional<Result>> slots(segments.size());
  std::vector<Diagnostics> local(segments.size());
  ParallelFor(segments.size(), ctx.opt.jobs, [&](std::size_t i) {
    try {
      slots[i] = fn(segments[i], &local[i]);
    } catch (const std::exception &e) {
      Error(&local[i], segments[i].segment_id, e.what());
    }
  });
  Result total{};
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (auto &d : local[i]) ctx.diags.push_back(std::move(d));
    if (slots[i]) {
      total += *slots[i];
      ++info->segments_scored;
    } else {
      ++info->segments_skipped;
    }
  }
  return total;
}

int RunLabel(Context &ctx) {
  RefCorpus corpus = LoadReference(ctx);
  return Finish(ctx, [&] {
    std::string text;
    for (const auto &seg : corpus.segments)
      text += SerializeCorpusRecord(SegmentToRecord(seg)) + "\n";
    return text;
  });
}

int RunStats(Context &ctx) {
  RefCorpus corpus = LoadReference(ctx);
  if (corpus.segments.empty())
    Warn(&ctx.diags, "", "empty corpus; all proportions are reported as 0");
  RunInfo info;
  CorpusStats stats = MapReduce<CorpusStats>(
      ctx, corpus.segments, &info,
      [&](const Segment &seg, Diagnostics *) -> std::optional<CorpusStats> {
        CorpusStats s;
        s.Add(seg, ctx.grid);
        return s;
      });
  return Finish(ctx,
                [&] { return RenderStatsReport(stats, ctx.grid, ctx.format); });
}

int RunWer(Context &ctx) {
  RefCorpus corpus = LoadReference(ctx);
  auto hyps = LoadHyps(ctx, IdsOf(corpus));
  RunInfo info;
  info.segments_skipped = corpus.rejected;
  EditSummary total = MapReduce<EditSummary>(
      ctx, corpus.segments, &info,
      [&](const Segment &seg, Diagnostics *d) -> std::optional<EditSummary> {
        auto it = hyps.find(seg.segment_id);
        if (it == hyps.end()) {
          Warn(d, seg.segment_id, "no hypothesis; skipped");
          return std::nullopt;
        }
        std::vector<std::string> tokens;
        for (auto &w : NormalizeHypWords(it->second, ctx.canon, d))
          tokens.push_back(std::move(w.text));
        return ScoreWords(seg, tokens);
      });
  if (total.nwords == 0)
    Warn(&ctx.diags, "", "no reference words scored; WER is undefined");
  return Finish(ctx,
                [&] { return RenderWerReport(total, info, ctx.format); });
}

int RunFer(Context &ctx) {
  RefCorpus corpus = LoadReference(ctx);
  auto hyps = LoadHyps(ctx, IdsOf(corpus));
  FerOptions fer_opt;
  fer_opt.ignore_reference_silence = ctx.opt.fer_ignore_silence;
  RunInfo info;
  info.segments_skipped = corpus.rejected;
  FrameErrorSummary total = MapReduce<FrameErrorSummary>(
      ctx, corpus.segments, &info,
      [&](const Segment &seg,
          Diagnostics *d) -> std::optional<FrameErrorSummary> {
        auto it = hyps.find(seg.segment_id);
        if (it == hyps.end()) {
          Warn(d, seg.segment_id, "no hypothesis; skipped");
          return std::nullopt;
        }
        std::vector<Word> words = NormalizeHypWords(it->second, ctx.canon, d);
        return ScoreFrames(seg, words, ctx.grid, fer_opt, d);
      });
  return Finish(ctx, [&] {
    return RenderFerReport(total, info, ctx.grid, fer_opt, ctx.format);
  });
}

int RunScore(Context &ctx) {
  if (ctx.opt.preds.size() != 1)
    throw CLI::ValidationError("--pred", "score takes exactly one --pred");
  RefCorpus corpus = LoadReference(ctx);
  auto preds = LoadPreds(ctx, ctx.opt.preds[0], IdsOf(corpus));
  RunInfo info;
  info.segments_skipped = corpus.rejected;
  DetectionCounts counts = MapReduce<DetectionCounts>(
      ctx, corpus.segments, &info,
      [&](const Segment &seg,
          Diagnostics *d) -> std::optional<DetectionCounts> {
        auto it = preds.find(seg.segment_id);
        if (it == preds.end()) {
          Warn(d, seg.segment_id, "no prediction; skipped");
          return std::nullopt;
        }
        LabelTrack pred = PredictionFrames(it->second, seg, ctx.grid, d);
        DetectionCounts c;
        c.Add(FrameLabels(seg, ctx.grid), pred);
        return c;
      });
  DetectionReport report = Summarize(counts, &ctx.diags);
  return Finish(ctx,
                [&] { return RenderScoreReport(report, info, ctx.format); });
}

int RunOverlap(Context &ctx) {
  const std::size_t k = ctx.opt.preds.size();
  if (k == 0 || k > kMaxOverlapSystems)
    throw CLI::ValidationError(
        "--pred", "overlap takes 1.." + std::to_string(kMaxOverlapSystems) +
                      " --pred files");
  std::vector<std::string> names = ctx.opt.names;
  if (names.empty()) {
    for (const auto &p : ctx.opt.preds)
      names.push_back(std::filesystem::path(p).stem().string());
  } else if (names.size() != k) {
    throw CLI::ValidationError("--name",
                               "give one --name per --pred or none at all");
  }

  RefCorpus corpus = LoadReference(ctx);
  const auto ids = IdsOf(corpus);
  std::vector<std::unordered_map<std::string, PredictionTrack>> systems;
  for (const auto &p : ctx.opt.preds) systems.push_back(LoadPreds(ctx, p, ids));

  OverlapOptions ov_opt;
  ov_opt.strict = ctx.opt.overlap_strict;
  RunInfo info;
  info.segments_skipped = corpus.rejected;
  OverlapResult result = MapReduce<OverlapResult>(
      ctx, corpus.segments, &info,
      [&](const Segment &seg, Diagnostics *d) -> std::optional<OverlapResult> {
        std::vector<LabelTrack> tracks;
        for (std::size_t s = 0; s < k; ++s) {
          auto it = systems[s].find(seg.segment_id);
          if (it == systems[s].end()) {
            Warn(d, seg.segment_id,
                 "no prediction from '" + names[s] + "'; skipped");
            return std::nullopt;
          }
          tracks.push_back(PredictionFrames(it->second, seg, ctx.grid, d));
        }
        std::vector<std::span<const DisfluencyFlags>> views(tracks.begin(),
                                                            tracks.end());
        return AnalyzeOverlap(FrameLabels(seg, ctx.grid), views, ov_opt);
      });
  if (result.diagrams.empty()) result = EmptyOverlap(k);
  WarnEmptyDiagrams(result, &ctx.diags);
  return Finish(ctx, [&] {
    return RenderOverlapReport(result, names, ov_opt, info, ctx.format);
  });
}

int RunValidate(Context &ctx) {
  RefCorpus corpus = LoadReference(ctx);
  const auto ids = IdsOf(corpus);
  std::unordered_map<std::string, const Segment *> by_id;
  for (const auto &s : corpus.segments) by_id[s.segment_id] = &s;

  if (!ctx.opt.hyp.empty()) {
    for (const auto &[id, hyp] : LoadHyps(ctx, ids)) {
      (void)id;
      Segment as_seg{hyp.segment_id, by_id.at(hyp.segment_id)->duration_s,
                     hyp.words, {}};
      Diagnostics d;
      ValidateSegment(as_seg, &d);
      for (auto &x : d) {
        x.message = "hypothesis " + x.message;
        ctx.diags.push_back(std::move(x));
      }
    }
  }
  for (const auto &path : ctx.opt.preds) {
    for (const auto &[id, pred] : LoadPreds(ctx, path, ids)) {
      try {
        PredictionFrames(pred, *by_id.at(id), ctx.grid, &ctx.diags);
      } catch (const ValidationError &e) {
        Error(&ctx.diags, id, path + ": " + e.what());
      }
    }
  }
  // Diagnostics of keyed files are not ordered by file position; sort them
  // for a stable report.
  std::stable_sort(ctx.diags.begin(), ctx.diags.end(),
                   [](const Diagnostic &a, const Diagnostic &b) {
                     return a.segment_id < b.segment_id;
                   });

  ValidationSummary summary;
  summary.segments = corpus.total;
  summary.invalid = corpus.rejected;
  for (const auto &d : ctx.diags)
    ++(d.severity == Severity::kError ? summary.errors : summary.warnings);
  PrintDiagnostics(ctx.diags, ctx.err);
  Emit(ctx, RenderValidationReport(summary, ctx.format));
  return HasErrors(ctx.diags) ? kExitValidation : kExitOk;
}

int RunBaseline(Context &ctx) {
  const bool from_ref = !ctx.opt.ref.empty();
  const std::string &path = from_ref ? ctx.opt.ref : ctx.opt.hyp;
  const std::vector<NumberedLine> lines = ReadLines(path);
  std::vector<std::optional<PredictionTrack>> slots(lines.size());
  std::vector<Diagnostics> local(lines.size());
  ParallelFor(lines.size(), ctx.opt.jobs, [&](std::size_t i) {
    const std::string where = Where(path, lines[i].lineno);
    try {
      HypRecord rec;
      if (from_ref) {
        CorpusRecord cr = ParseCorpusRecord(lines[i].text, where);
        rec.segment_id = cr.segment_id;
        for (const auto &w : cr.words)
          rec.words.push_back({w.text, w.start_s, w.end_s, {}});
      } else {
        rec = ParseHypRecord(lines[i].text, where);
      }
      std::vector<Word> words;
      std::vector<std::string> tokens;
      for (const auto &w : rec.words) {
        auto tok = NormalizeToken(w.text, ctx.canon, false);
        if (!tok) {
          Warn(&local[i], rec.segment_id,
               "word \"" + w.text + "\" is empty after normalization; dropped");
          continue;
        }
        tokens.push_back(*tok);
        words.push_back(w);
      }
      std::vector<DisfluencyFlags> flags =
          TagDisfluencies(tokens, ctx.opt.max_span);
      for (std::size_t k = 0; k < words.size(); ++k) {
        words[k].text = *NormalizeToken(tokens[k], ctx.canon, true);
        words[k].flags = flags[k];
      }
      slots[i] = PredictionTrack{rec.segment_id, std::move(words)};
    } catch (const FormatError &e) {
      Error(&local[i], "", e.what());
    }
  });
  for (auto &d : local)
    for (auto &x : d) ctx.diags.push_back(std::move(x));
  return Finish(ctx, [&] {
    std::string text;
    for (const auto &s : slots)
      if (s) text += SerializePrediction(*s) + "\n";
    return text;
  });
}

int RunFuse(Context &ctx) {
  std::vector<WordVector> words;
  for (const auto &line : ReadLines(ctx.opt.words))
    words.push_back(
        ParseWordVector(line.text, Where(ctx.opt.words, line.lineno)));

  std::optional<FeatureMatrix> frames;
  if (!ctx.opt.frames.empty()) {
    std::ifstream is(ctx.opt.frames);
    if (!is) throw ConfigError("cannot open '" + ctx.opt.frames + "'");
    frames = ReadFeatureMatrix(is, ctx.opt.frames);
  }

  double duration;
  if (ctx.opt.duration) {
    duration = *ctx.opt.duration;
  } else if (frames) {
    // Shortest duration that yields exactly frames->rows() frames.
    duration = ctx.grid.win_s() +
               static_cast<double>(std::max<std::size_t>(frames->rows(), 1) - 1) *
                   ctx.grid.hop_s();
  } else {
    throw CLI::ValidationError("--duration",
                               "required when --frames is not given");
  }

  std::size_t dim;
  if (ctx.opt.word_dim)
    dim = *ctx.opt.word_dim;
  else if (!words.empty())
    dim = words.front().vec.size();
  else
    throw CLI::ValidationError(
        "--word-dim", "required when the word file holds no vectors");

  std::size_t clipped = 0;
  for (auto &w : words) {
    double s = std::clamp(w.start_s, 0.0, duration);
    double e = std::clamp(w.end_s, s, duration);
    if (s != w.start_s || e != w.end_s) ++clipped;
    w.start_s = s;
    w.end_s = e;
  }
  if (clipped > 0)
    Warn(&ctx.diags, "",
         std::to_string(clipped) + " word(s) extend past the duration; clipped");

  FeatureMatrix upsampled = UpsampleWordFeatures(words, ctx.grid, duration, dim);
  FeatureMatrix result =
      frames ? ConcatStreams(*frames, upsampled, &ctx.diags) : upsampled;
  return Finish(ctx, [&] {
    std::ostringstream os;
    WriteFeatureMatrix(os, result);
    return os.str();
  });
}

std::size_t DefaultJobs(std::ostream &err, bool *ok) {
  *ok = true;
  const char *env = std::getenv("DISFLEVAL_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char *end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    err << "disfleval: DISFLEVAL_JOBS must be a positive integer, got '"
        << env << "'\n";
    *ok = false;
    return 1;
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  Options opt;
  bool jobs_ok = true;
  opt.jobs = DefaultJobs(err, &jobs_ok);
  if (!jobs_ok) return kExitUsage;

  CLI::App app{"Disfluency-aware evaluation of transcripts and frame-level "
               "disfluency detection.",
               "disfleval"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--hop", opt.hop, "Frame hop in seconds")
      ->capture_default_str();
  app.add_option("--win", opt.win, "Frame window in seconds")
      ->capture_default_str();
  app.add_option("--canon-map", opt.canon_map,
                 "Extra spelling canonicalizations: surface<TAB>canonical "
                 "per line");
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write the report here instead of stdout");
  app.add_flag("--fer-ignore-silence", opt.fer_ignore_silence,
               "fer: leave out frames that are silent in the reference");
  app.add_flag("--overlap-strict", opt.overlap_strict,
               "overlap: a frame is correct only if all its true classes "
               "are predicted");
  app.add_option("--jobs", opt.jobs,
                 "Worker threads (default: $DISFLEVAL_JOBS or 1)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  app.add_flag("--strict", opt.strict,
               "Abort (exit 1) instead of skipping invalid segments");

  auto add_ref = [&](CLI::App *sub, bool required) {
    auto *o = sub->add_option("--ref", opt.ref, "Reference corpus (JSON lines)");
    if (required) o->required();
    return o;
  };

  CLI::App *label = app.add_subcommand(
      "label", "Map error/correction annotations to disfluency labels");
  add_ref(label, true);

  CLI::App *stats =
      app.add_subcommand("stats", "Class proportions per utterance/word/frame");
  add_ref(stats, true);

  CLI::App *wer = app.add_subcommand("wer", "WER, WER-ND and WER-D");
  add_ref(wer, true);
  wer->add_option("--hyp", opt.hyp, "Hypothesis transcripts")->required();

  CLI::App *fer = app.add_subcommand("fer", "FER, FER-ND and FER-D");
  add_ref(fer, true);
  fer->add_option("--hyp", opt.hyp, "Hypothesis transcripts")->required();

  CLI::App *score = app.add_subcommand(
      "score", "Frame-level F1/recall per class and macro averages");
  add_ref(score, true);
  score->add_option("--pred", opt.preds, "Predictions (word or frame level)")
      ->required();

  CLI::App *overlap = app.add_subcommand(
      "overlap", "Which systems categorize each disfluent frame correctly");
  add_ref(overlap, true);
  overlap->add_option("--pred", opt.preds, "Prediction file (repeatable)")
      ->required();
  overlap->add_option("--name", opt.names, "System name per --pred");

  CLI::App *fuse = app.add_subcommand(
      "fuse", "Upsample word vectors to frames and append to frame features");
  fuse->add_option("--words", opt.words, "Word vectors (JSON lines)")
      ->required();
  fuse->add_option("--frames", opt.frames,
                   "Frame-rate feature matrix; its columns come first");
  fuse->add_option("--duration", opt.duration, "Segment duration in seconds");
  fuse->add_option("--word-dim", opt.word_dim,
                   "Word vector dimension when no word is present");

  CLI::App *baseline = app.add_subcommand(
      "baseline", "Rule-based tagger emitting word-level predictions");
  auto *bref = add_ref(baseline, false);
  auto *bhyp = baseline->add_option("--hyp", opt.hyp, "Transcripts to tag");
  bref->excludes(bhyp);
  baseline->add_option("--max-span", opt.max_span,
                       "Longest repeated span in tokens")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));

  CLI::App *validate =
      app.add_subcommand("validate", "Check files without scoring");
  add_ref(validate, true);
  validate->add_option("--hyp", opt.hyp, "Hypothesis transcripts");
  validate->add_option("--pred", opt.preds, "Prediction files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (baseline->parsed() && opt.ref.empty() && opt.hyp.empty())
      throw CLI::RequiredError("--ref or --hyp");
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "disfleval: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    CanonMap canon = CanonMap::Default();
    if (!opt.canon_map.empty()) {
      try {
        canon = CanonMap::Load(opt.canon_map, canon);
      } catch (const FormatError &e) {
        throw ConfigError(e.what());
      }
    }
    Context ctx{opt,
                FrameGrid(opt.hop, opt.win),
                std::move(canon),
                opt.format == "md" ? ReportFormat::kMarkdown
                                   : ReportFormat::kJson,
                out,
                err,
                {}};
    if (label->parsed()) return RunLabel(ctx);
    if (stats->parsed()) return RunStats(ctx);
    if (wer->parsed()) return RunWer(ctx);
    if (fer->parsed()) return RunFer(ctx);
    if (score->parsed()) return RunScore(ctx);
    if (overlap->parsed()) return RunOverlap(ctx);
    if (fuse->parsed()) return RunFuse(ctx);
    if (baseline->parsed()) return RunBaseline(ctx);
    if (validate->parsed()) return RunValidate(ctx);
  } catch (const CLI::ValidationError &e) {
    err << "disfleval: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError &e) {
    err << "disfleval: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError &e) {
    err << "disfleval: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "disfleval: error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace disfleval
