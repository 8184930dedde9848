// include/disfleval/scoring.h

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

#ifndef DISFLEVAL_SCORING_H_
#define DISFLEVAL_SCORING_H_

// Frame-level detection scoring. Every disfluency class is treated as an
// independent binary frame task; "NonDisfluent" is the task of predicting the
// all-false flag vector. Macros average the five disfluency classes only,
// skipping classes without ground-truth support.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "disfleval/corpus.h"

namespace disfleval {

/// Word-level or frame-level predictions for one segment.
struct PredictionTrack {
  std::string segment_id;
  std::variant<std::vector<Word>, LabelTrack> data;

  bool IsWordLevel() const { return data.index() == 0; }
};

/// Frame flags for `pred` on the reference segment's grid. Word-level
/// predictions are clipped to the reference duration and upsampled with the
/// same projection as the ground truth. Frame-level tracks must already have
/// the reference frame count (ValidationError otherwise).
LabelTrack PredictionFrames(const PredictionTrack &pred, const Segment &ref,
                            const FrameGrid &grid,
                            Diagnostics *diags = nullptr);

struct Confusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t Support() const { return tp + fn; }
  /// tp / (tp + fn); nullopt without support.
  std::optional<double> Recall() const;
  /// 2tp / (2tp + fp + fn); nullopt when that denominator is 0.
  std::optional<double> F1() const;

  Confusion &operator+=(const Confusion &o);
  friend bool operator==(const Confusion &, const Confusion &) = default;
};

/// Index of the NonDisfluent column in DetectionCounts::classes.
inline constexpr std::size_t kNonDisfluentIndex = kNumClasses;

/// Confusion counts for the five classes (kAllClasses order) plus
/// NonDisfluent.
struct DetectionCounts {
  std::array<Confusion, kNumClasses + 1> classes = {};

  /// Throws ValidationError if the tracks differ in length.
  void Add(std::span<const DisfluencyFlags> truth,
           std::span<const DisfluencyFlags> pred);
  DetectionCounts &operator+=(const DetectionCounts &o);
  friend bool operator==(const DetectionCounts &,
                         const DetectionCounts &) = default;
};

struct DetectionReport {
  DetectionCounts counts;
  std::optional<double> unweighted_recall;
  std::optional<double> weighted_recall;
  std::optional<double> unweighted_f1;
  std::optional<double> weighted_f1;
  /// Disfluency classes left out of the macros for lack of support.
  std::vector<DisfluencyClass> excluded;
};

DetectionReport Summarize(const DetectionCounts &counts,
                          Diagnostics *diags = nullptr);

/// Convenience for a single pair of tracks.
DetectionReport ScoreDetection(std::span<const DisfluencyFlags> truth,
                               std::span<const DisfluencyFlags> pred,
                               Diagnostics *diags = nullptr);

/// Which systems got a frame right, as a bit mask over systems (bit k set
/// when system k was correct). A diagram counts frames per mask; mask 0 is
/// "missed by all".
struct OverlapDiagram {
  std::string name;  // "Overall" or a class name
  std::vector<std::uint64_t> mask_counts;

  std::uint64_t Total() const;
  /// Percentage of qualifying frames with exactly this correctness mask;
  /// 0 for an empty diagram.
  double Percent(std::uint32_t mask) const;

  OverlapDiagram &operator+=(const OverlapDiagram &o);
  friend bool operator==(const OverlapDiagram &,
                         const OverlapDiagram &) = default;
};

struct OverlapOptions {
  /// Overall diagram: require every true class to be predicted, instead of
  /// at least one.
  bool strict = false;
};

/// Diagrams in the order Overall, FP, PW, RP, RV, RS.
struct OverlapResult {
  std::size_t num_systems = 0;
  std::vector<OverlapDiagram> diagrams;

  OverlapResult &operator+=(const OverlapResult &o);
  friend bool operator==(const OverlapResult &,
                         const OverlapResult &) = default;
};

inline constexpr std::size_t kMaxOverlapSystems = 16;

/// Empty (all-zero) result for `num_systems` systems.
OverlapResult EmptyOverlap(std::size_t num_systems);

/// Counts for one segment. All tracks must have the truth's length.
/// Throws ConfigError for K == 0 or K > kMaxOverlapSystems.
OverlapResult AnalyzeOverlap(
    std::span<const DisfluencyFlags> truth,
    std::span<const std::span<const DisfluencyFlags>> systems,
    const OverlapOptions &options = {});

/// Warns for every diagram without qualifying frames.
void WarnEmptyDiagrams(const OverlapResult &result, Diagnostics *diags);

}  // namespace disfleval

#endif  // DISFLEVAL_SCORING_H_
