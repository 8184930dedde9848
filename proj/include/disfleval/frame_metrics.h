// include/disfleval/frame_metrics.h

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

#ifndef DISFLEVAL_FRAME_METRICS_H_
#define DISFLEVAL_FRAME_METRICS_H_

// Frame error rates: reference and hypothesis words are projected onto the
// same frame grid (the reference duration fixes the frame count) and compared
// frame by frame. "No word" is a token of its own, so a frame where only one
// side has a word is an error.

#include <cstdint>
#include <optional>
#include <span>

#include "disfleval/corpus.h"

namespace disfleval {

struct FrameErrorSummary {
  std::uint64_t nframes = 0;
  std::uint64_t nframes_e = 0;
  std::uint64_t nframes_d = 0;
  std::uint64_t nframes_n = 0;
  std::uint64_t nframes_e_d = 0;
  std::uint64_t nframes_e_n = 0;

  std::optional<double> Fer() const;
  std::optional<double> FerNondisfluent() const;
  std::optional<double> FerDisfluent() const;

  FrameErrorSummary &operator+=(const FrameErrorSummary &other);
  friend bool operator==(const FrameErrorSummary &,
                         const FrameErrorSummary &) = default;
};

struct FerOptions {
  /// Drop frames that are silent in the reference from every count.
  bool ignore_reference_silence = false;
};

/// Scores `hyp` against the labeled reference. Hypothesis intervals that run
/// past the reference duration are clipped, with a warning.
FrameErrorSummary ScoreFrames(const Segment &ref, std::span<const Word> hyp,
                              const FrameGrid &grid,
                              const FerOptions &options = {},
                              Diagnostics *diags = nullptr);

}  // namespace disfleval

#endif  // DISFLEVAL_FRAME_METRICS_H_
