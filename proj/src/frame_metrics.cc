// src/frame_metrics.cc

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

#include "disfleval/frame_metrics.h"

#include <string>
#include <vector>

namespace disfleval {

namespace {
std::optional<double> Rate(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

std::optional<double> FrameErrorSummary::Fer() const {
  return Rate(nframes_e, nframes);
}

std::optional<double> FrameErrorSummary::FerNondisfluent() const {
  return Rate(nframes_e_n, nframes_n);
}

std::optional<double> FrameErrorSummary::FerDisfluent() const {
  return Rate(nframes_e_d, nframes_d);
}

FrameErrorSummary &FrameErrorSummary::operator+=(const FrameErrorSummary &o) {
  nframes += o.nframes;
  nframes_e += o.nframes_e;
  nframes_d += o.nframes_d;
  nframes_n += o.nframes_n;
  nframes_e_d += o.nframes_e_d;
  nframes_e_n += o.nframes_e_n;
  return *this;
}

FrameErrorSummary ScoreFrames(const Segment &ref, std::span<const Word> hyp,
                              const FrameGrid &grid, const FerOptions &options,
                              Diagnostics *diags) {
  const std::size_t nframes = grid.NumFrames(ref.duration_s);
  const WordProjection ref_proj = ProjectIntervals(ref.words, grid, nframes);

  std::vector<Word> clipped(hyp.begin(), hyp.end());
  if (std::size_t n = ClipToDuration(&clipped, ref.duration_s); n > 0)
    Warn(diags, ref.segment_id,
         std::to_string(n) +
             " hypothesis word(s) extend past the reference duration; clipped");
  const WordProjection hyp_proj = ProjectIntervals(clipped, grid, nframes);

  FrameErrorSummary s;
  for (std::size_t i = 0; i < nframes; ++i) {
    const auto &r = ref_proj.frames[i];
    const auto &h = hyp_proj.frames[i];
    if (!r && options.ignore_reference_silence) continue;
    bool error = r.has_value() != h.has_value() ||
                 (r && ref.words[*r].text != clipped[*h].text);
    bool disfluent = r && ref.words[*r].flags.IsDisfluent();
    ++s.nframes;
    ++(disfluent ? s.nframes_d : s.nframes_n);
    if (error) {
      ++s.nframes_e;
      ++(disfluent ? s.nframes_e_d : s.nframes_e_n);
    }
  }
  return s;
}

}  // namespace disfleval
