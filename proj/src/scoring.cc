// src/scoring.cc

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

#include "disfleval/scoring.h"

#include <sstream>

namespace disfleval {

LabelTrack PredictionFrames(const PredictionTrack &pred, const Segment &ref,
                            const FrameGrid &grid, Diagnostics *diags) {
  const std::size_t nframes = grid.NumFrames(ref.duration_s);
  if (const auto *frames = std::get_if<LabelTrack>(&pred.data)) {
    if (frames->size() != nframes) {
      std::ostringstream os;
      os << "segment '" << ref.segment_id << "': prediction has "
         << frames->size() << " frames, reference grid has " << nframes;
      throw ValidationError(os.str());
    }
    return *frames;
  }
  std::vector<Word> words = std::get<std::vector<Word>>(pred.data);
  if (std::size_t n = ClipToDuration(&words, ref.duration_s); n > 0)
    Warn(diags, ref.segment_id,
         std::to_string(n) +
             " predicted word(s) extend past the reference duration; clipped");
  return LabelsFromProjection(ProjectIntervals(words, grid, nframes), words);
}

std::optional<double> Confusion::Recall() const {
  if (Support() == 0) return std::nullopt;
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

std::optional<double> Confusion::F1() const {
  const std::uint64_t den = 2 * tp + fp + fn;
  if (den == 0) return std::nullopt;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(den);
}

Confusion &Confusion::operator+=(const Confusion &o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  tn += o.tn;
  return *this;
}

namespace {
void Tally(Confusion *c, bool truth, bool pred) {
  if (truth)
    ++(pred ? c->tp : c->fn);
  else
    ++(pred ? c->fp : c->tn);
}
}  // namespace

void DetectionCounts::Add(std::span<const DisfluencyFlags> truth,
                          std::span<const DisfluencyFlags> pred) {
  if (truth.size() != pred.size()) {
    std::ostringstream os;
    os << "frame count mismatch: truth has " << truth.size()
       << " frames, prediction has " << pred.size();
    throw ValidationError(os.str());
  }
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t c = 0; c < kNumClasses; ++c)
      Tally(&classes[c], truth[i].Has(kAllClasses[c]),
            pred[i].Has(kAllClasses[c]));
    Tally(&classes[kNonDisfluentIndex], !truth[i].IsDisfluent(),
          !pred[i].IsDisfluent());
  }
}

DetectionCounts &DetectionCounts::operator+=(const DetectionCounts &o) {
  for (std::size_t c = 0; c < classes.size(); ++c) classes[c] += o.classes[c];
  return *this;
}

DetectionReport Summarize(const DetectionCounts &counts, Diagnostics *diags) {
  DetectionReport r;
  r.counts = counts;
  double recall_sum = 0, f1_sum = 0, w_recall_sum = 0, w_f1_sum = 0;
  std::uint64_t support_sum = 0;
  std::size_t used = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const Confusion &conf = counts.classes[c];
    if (conf.Support() == 0) {
      r.excluded.push_back(kAllClasses[c]);
      Warn(diags, "",
           std::string("class ") + std::string(ClassName(kAllClasses[c])) +
               " has no ground-truth frames; excluded from macros");
      continue;
    }
    const double recall = *conf.Recall(), f1 = *conf.F1();
    const double w = static_cast<double>(conf.Support());
    recall_sum += recall;
    f1_sum += f1;
    w_recall_sum += w * recall;
    w_f1_sum += w * f1;
    support_sum += conf.Support();
    ++used;
  }
  if (used > 0) {
    r.unweighted_recall = recall_sum / used;
    r.unweighted_f1 = f1_sum / used;
    r.weighted_recall = w_recall_sum / static_cast<double>(support_sum);
    r.weighted_f1 = w_f1_sum / static_cast<double>(support_sum);
  }
  return r;
}

DetectionReport ScoreDetection(std::span<const DisfluencyFlags> truth,
                               std::span<const DisfluencyFlags> pred,
                               Diagnostics *diags) {
  DetectionCounts counts;
  counts.Add(truth, pred);
  return Summarize(counts, diags);
}

std::uint64_t OverlapDiagram::Total() const {
  std::uint64_t t = 0;
  for (auto c : mask_counts) t += c;
  return t;
}

double OverlapDiagram::Percent(std::uint32_t mask) const {
  const std::uint64_t total = Total();
  if (total == 0 || mask >= mask_counts.size()) return 0.0;
  return 100.0 * static_cast<double>(mask_counts[mask]) /
         static_cast<double>(total);
}

OverlapDiagram &OverlapDiagram::operator+=(const OverlapDiagram &o) {
  if (mask_counts.size() < o.mask_counts.size())
    mask_counts.resize(o.mask_counts.size(), 0);
  for (std::size_t m = 0; m < o.mask_counts.size(); ++m)
    mask_counts[m] += o.mask_counts[m];
  return *this;
}

OverlapResult &OverlapResult::operator+=(const OverlapResult &o) {
  if (diagrams.empty()) {
    *this = o;
    return *this;
  }
  if (o.num_systems != num_systems || o.diagrams.size() != diagrams.size())
    throw ConfigError("cannot merge overlap results for different systems");
  for (std::size_t d = 0; d < diagrams.size(); ++d) diagrams[d] += o.diagrams[d];
  return *this;
}

OverlapResult EmptyOverlap(std::size_t num_systems) {
  if (num_systems == 0 || num_systems > kMaxOverlapSystems) {
    std::ostringstream os;
    os << "overlap analysis needs 1.." << kMaxOverlapSystems
       << " systems, got " << num_systems;
    throw ConfigError(os.str());
  }
  OverlapResult r;
  r.num_systems = num_systems;
  const std::size_t masks = std::size_t{1} << num_systems;
  r.diagrams.push_back({"Overall", std::vector<std::uint64_t>(masks, 0)});
  for (auto c : kAllClasses)
    r.diagrams.push_back(
        {std::string(ClassName(c)), std::vector<std::uint64_t>(masks, 0)});
  return r;
}

OverlapResult AnalyzeOverlap(
    std::span<const DisfluencyFlags> truth,
    std::span<const std::span<const DisfluencyFlags>> systems,
    const OverlapOptions &options) {
  OverlapResult r = EmptyOverlap(systems.size());
  for (std::size_t k = 0; k < systems.size(); ++k) {
    if (systems[k].size() != truth.size()) {
      std::ostringstream os;
      os << "system " << k << " has " << systems[k].size()
         << " frames, truth has " << truth.size();
      throw ValidationError(os.str());
    }
  }
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const DisfluencyFlags &t = truth[i];
    if (!t.IsDisfluent()) continue;
    std::uint32_t overall = 0;
    std::array<std::uint32_t, kNumClasses> per_class = {};
    for (std::size_t k = 0; k < systems.size(); ++k) {
      const DisfluencyFlags &p = systems[k][i];
      bool any = false, all = true;
      for (std::size_t c = 0; c < kNumClasses; ++c) {
        if (!t.Has(kAllClasses[c])) continue;
        bool hit = p.Has(kAllClasses[c]);
        if (hit) per_class[c] |= 1u << k;
        any = any || hit;
        all = all && hit;
      }
      if (options.strict ? all : any) overall |= 1u << k;
    }
    ++r.diagrams[0].mask_counts[overall];
    for (std::size_t c = 0; c < kNumClasses; ++c)
      if (t.Has(kAllClasses[c])) ++r.diagrams[c + 1].mask_counts[per_class[c]];
  }
  return r;
}

void WarnEmptyDiagrams(const OverlapResult &result, Diagnostics *diags) {
  for (const auto &d : result.diagrams)
    if (d.Total() == 0)
      Warn(diags, "", "overlap diagram '" + d.name +
                          "' has no disfluent frames; left empty");
}

}  // namespace disfleval
