// src/report.cc

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

#include "disfleval/report.h"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "disfleval/io.h"
#include "json.hpp"

namespace disfleval {

using nlohmann::ordered_json;

std::string FormatFixed4(double v) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
  std::string s(buf, res.ptr);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string FormatFixed4(const std::optional<double> &v) {
  return v ? FormatFixed4(*v) : "n/a";
}

namespace {

ordered_json Rounded(const std::optional<double> &v) {
  if (!v) return nullptr;
  return std::strtod(FormatFixed4(*v).c_str(), nullptr);
}

std::string Dump(const ordered_json &j) { return j.dump(2) + "\n"; }

void AddRunInfo(ordered_json *j, const RunInfo &info) {
  (*j)["segments_scored"] = info.segments_scored;
  (*j)["segments_skipped"] = info.segments_skipped;
}

std::string RunInfoLine(const RunInfo &info) {
  std::ostringstream os;
  os << "Segments scored: " << info.segments_scored
     << ", skipped: " << info.segments_skipped << "\n";
  return os.str();
}

// Column order of the detection tables: FP RP RV RS PW.
constexpr std::array<DisfluencyClass, kNumClasses> kTableOrder = {
    DisfluencyClass::kFilledPause, DisfluencyClass::kRepetition,
    DisfluencyClass::kRevision, DisfluencyClass::kRestart,
    DisfluencyClass::kPartialWord};

const char *kNonDisfluentName = "NonDisfluent";

}  // namespace

std::string RenderWerReport(const EditSummary &s, const RunInfo &info,
                            ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "wer";
    AddRunInfo(&j, info);
    j["counts"] = {{"nwords", s.nwords}, {"nwords_d", s.nwords_d},
                   {"nwords_n", s.nwords_n}, {"I", s.ins},
                   {"D", s.del}, {"S", s.sub},
                   {"I_n", s.ins_n}, {"D_d", s.del_d},
                   {"D_n", s.del_n}, {"S_d", s.sub_d},
                   {"S_n", s.sub_n}};
    j["rates"] = {{"WER", Rounded(s.Wer())},
                  {"WER-ND", Rounded(s.WerNondisfluent())},
                  {"WER-D", Rounded(s.WerDisfluent())}};
    return Dump(j);
  }
  std::ostringstream os;
  os << "## Word error rates\n\n" << RunInfoLine(info) << "\n";
  os << "| WER | WER-ND | WER-D |\n|---|---|---|\n";
  os << "| " << FormatFixed4(s.Wer()) << " | "
     << FormatFixed4(s.WerNondisfluent()) << " | "
     << FormatFixed4(s.WerDisfluent()) << " |\n\n";
  os << "| nwords | nwords_d | nwords_n | I | D | S | I_n | D_d | D_n | S_d | "
        "S_n |\n|---|---|---|---|---|---|---|---|---|---|---|\n";
  os << "| " << s.nwords << " | " << s.nwords_d << " | " << s.nwords_n
     << " | " << s.ins << " | " << s.del << " | " << s.sub << " | " << s.ins_n
     << " | " << s.del_d << " | " << s.del_n << " | " << s.sub_d << " | "
     << s.sub_n << " |\n";
  return os.str();
}

std::string RenderFerReport(const FrameErrorSummary &s, const RunInfo &info,
                            const FrameGrid &grid, const FerOptions &options,
                            ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "fer";
    AddRunInfo(&j, info);
    j["grid"] = {{"hop_s", grid.hop_s()}, {"win_s", grid.win_s()}};
    j["ignore_reference_silence"] = options.ignore_reference_silence;
    j["counts"] = {{"nframes", s.nframes},         {"nframes_e", s.nframes_e},
                   {"nframes_d", s.nframes_d},     {"nframes_n", s.nframes_n},
                   {"nframes_e_d", s.nframes_e_d}, {"nframes_e_n", s.nframes_e_n}};
    j["rates"] = {{"FER", Rounded(s.Fer())},
                  {"FER-ND", Rounded(s.FerNondisfluent())},
                  {"FER-D", Rounded(s.FerDisfluent())}};
    return Dump(j);
  }
  std::ostringstream os;
  os << "## Frame error rates\n\n" << RunInfoLine(info);
  os << "Grid: hop " << FormatShortest(grid.hop_s()) << " s, window "
     << FormatShortest(grid.win_s()) << " s"
     << (options.ignore_reference_silence ? ", reference silence ignored" : "")
     << "\n\n";
  os << "| FER | FER-ND | FER-D |\n|---|---|---|\n";
  os << "| " << FormatFixed4(s.Fer()) << " | "
     << FormatFixed4(s.FerNondisfluent()) << " | "
     << FormatFixed4(s.FerDisfluent()) << " |\n\n";
  os << "| nframes | nframes_e | nframes_d | nframes_n | nframes_e_d | "
        "nframes_e_n |\n|---|---|---|---|---|---|\n";
  os << "| " << s.nframes << " | " << s.nframes_e << " | " << s.nframes_d
     << " | " << s.nframes_n << " | " << s.nframes_e_d << " | "
     << s.nframes_e_n << " |\n";
  return os.str();
}

std::string RenderScoreReport(const DetectionReport &r, const RunInfo &info,
                              ReportFormat format) {
  auto column = [&](std::size_t idx) -> const Confusion & {
    return r.counts.classes[idx];
  };
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "score";
    AddRunInfo(&j, info);
    j["macros"] = {{"unweighted_f1", Rounded(r.unweighted_f1)},
                   {"weighted_f1", Rounded(r.weighted_f1)},
                   {"unweighted_recall", Rounded(r.unweighted_recall)},
                   {"weighted_recall", Rounded(r.weighted_recall)}};
    ordered_json classes;
    auto add = [&](const std::string &name, const Confusion &c) {
      classes[name] = {{"support", c.Support()}, {"tp", c.tp},
                       {"fp", c.fp},             {"fn", c.fn},
                       {"tn", c.tn},             {"f1", Rounded(c.F1())},
                       {"recall", Rounded(c.Recall())}};
    };
    for (auto c : kTableOrder)
      add(std::string(ClassName(c)), column(static_cast<std::size_t>(c)));
    add(kNonDisfluentName, column(kNonDisfluentIndex));
    j["classes"] = std::move(classes);
    ordered_json excluded = ordered_json::array();
    for (auto c : r.excluded) excluded.push_back(std::string(ClassName(c)));
    j["excluded_from_macros"] = std::move(excluded);
    return Dump(j);
  }

  std::ostringstream os;
  os << "## Frame-level detection\n\n" << RunInfoLine(info) << "\n";
  os << "| Metric | Unweighted | Weighted | FP | RP | RV | RS | PW | "
        "Non-Disfluent |\n|---|---|---|---|---|---|---|---|---|\n";
  auto row = [&](const char *name, const std::optional<double> &uw,
                 const std::optional<double> &w, auto metric) {
    os << "| " << name << " | " << FormatFixed4(uw) << " | " << FormatFixed4(w);
    for (auto c : kTableOrder)
      os << " | " << FormatFixed4(metric(column(static_cast<std::size_t>(c))));
    os << " | " << FormatFixed4(metric(column(kNonDisfluentIndex))) << " |\n";
  };
  row("F1", r.unweighted_f1, r.weighted_f1,
      [](const Confusion &c) { return c.F1(); });
  row("Recall", r.unweighted_recall, r.weighted_recall,
      [](const Confusion &c) { return c.Recall(); });
  os << "\n| Class | Support | TP | FP | FN | TN |\n|---|---|---|---|---|---|\n";
  auto counts_row = [&](std::string_view name, const Confusion &c) {
    os << "| " << name << " | " << c.Support() << " | " << c.tp << " | "
       << c.fp << " | " << c.fn << " | " << c.tn << " |\n";
  };
  for (auto c : kTableOrder)
    counts_row(ClassName(c), column(static_cast<std::size_t>(c)));
  counts_row("Non-Disfluent", column(kNonDisfluentIndex));
  if (!r.excluded.empty()) {
    os << "\nExcluded from macros (no support):";
    for (auto c : r.excluded) os << " " << ClassName(c);
    os << "\n";
  }
  return os.str();
}

std::string RenderOverlapReport(const OverlapResult &r,
                                std::span<const std::string> names,
                                const OverlapOptions &options,
                                const RunInfo &info, ReportFormat format) {
  auto members = [&](std::uint32_t mask) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (mask & (1u << k)) out.push_back(names[k]);
    return out;
  };
  const std::uint32_t masks = 1u << r.num_systems;

  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "overlap";
    AddRunInfo(&j, info);
    j["systems"] = std::vector<std::string>(names.begin(), names.end());
    j["strict"] = options.strict;
    ordered_json diagrams = ordered_json::array();
    for (const auto &d : r.diagrams) {
      ordered_json dj;
      dj["name"] = d.name;
      dj["frames"] = d.Total();
      ordered_json regions = ordered_json::array();
      for (std::uint32_t m = 1; m < masks; ++m)
        regions.push_back({{"systems", members(m)},
                           {"frames", d.mask_counts[m]},
                           {"percent", Rounded(d.Percent(m))}});
      dj["regions"] = std::move(regions);
      dj["missed"] = {{"frames", d.mask_counts[0]},
                      {"percent", Rounded(d.Percent(0))}};
      diagrams.push_back(std::move(dj));
    }
    j["diagrams"] = std::move(diagrams);
    return Dump(j);
  }

  std::ostringstream os;
  os << "## Correctly categorized disfluent frames by system subset\n\n"
     << RunInfoLine(info)
     << "Overall correctness: "
     << (options.strict ? "all true classes predicted"
                        : "any true class predicted")
     << "\n";
  for (const auto &d : r.diagrams) {
    os << "\n### " << d.name << " (" << d.Total() << " frames)\n\n";
    os << "| Correct systems | Frames | Percent |\n|---|---|---|\n";
    for (std::uint32_t m = 1; m < masks; ++m) {
      os << "| ";
      auto who = members(m);
      for (std::size_t k = 0; k < who.size(); ++k)
        os << (k ? " + " : "") << who[k];
      os << " | " << d.mask_counts[m] << " | " << FormatFixed4(d.Percent(m))
         << " |\n";
    }
    os << "| (none) | " << d.mask_counts[0] << " | "
       << FormatFixed4(d.Percent(0)) << " |\n";
  }
  return os.str();
}

std::string RenderStatsReport(const CorpusStats &s, const FrameGrid &grid,
                              ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "stats";
    j["grid"] = {{"hop_s", grid.hop_s()}, {"win_s", grid.win_s()}};
    j["segments"] = s.segments;
    j["words"] = s.words;
    j["frames"] = s.frames;
    ordered_json classes;
    for (auto c : kAllClasses) {
      const auto k = static_cast<std::size_t>(c);
      classes[std::string(ClassName(c))] = {
          {"utterance", Rounded(s.UtteranceProportion(c))},
          {"word", Rounded(s.WordProportion(c))},
          {"frame", Rounded(s.FrameProportion(c))},
          {"segments_with", s.segments_with[k]},
          {"words_with", s.words_with[k]},
          {"frames_with", s.frames_with[k]}};
    }
    j["classes"] = std::move(classes);
    return Dump(j);
  }
  std::ostringstream os;
  os << "## Class proportions\n\n"
     << s.segments << " segments, " << s.words << " words, " << s.frames
     << " frames\n\n";
  os << "| Class | Utterance | Word | Frame |\n|---|---|---|---|\n";
  for (auto c : kAllClasses)
    os << "| " << ClassName(c) << " | " << FormatFixed4(s.UtteranceProportion(c))
       << " | " << FormatFixed4(s.WordProportion(c)) << " | "
       << FormatFixed4(s.FrameProportion(c)) << " |\n";
  return os.str();
}

std::string RenderValidationReport(const ValidationSummary &s,
                                   ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["command"] = "validate";
    j["segments"] = s.segments;
    j["valid"] = s.segments - s.invalid;
    j["invalid"] = s.invalid;
    j["errors"] = s.errors;
    j["warnings"] = s.warnings;
    return Dump(j);
  }
  std::ostringstream os;
  os << "## Validation\n\n| Segments | Valid | Invalid | Errors | Warnings "
        "|\n|---|---|---|---|---|\n";
  os << "| " << s.segments << " | " << (s.segments - s.invalid) << " | "
     << s.invalid << " | " << s.errors << " | " << s.warnings << " |\n";
  return os.str();
}

}  // namespace disfleval
