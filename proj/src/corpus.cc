// src/corpus.cc

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

#include "disfleval/corpus.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace disfleval {

std::string_view ClassName(DisfluencyClass c) {
  switch (c) {
    case DisfluencyClass::kFilledPause: return "FP";
    case DisfluencyClass::kPartialWord: return "PW";
    case DisfluencyClass::kRepetition: return "RP";
    case DisfluencyClass::kRevision: return "RV";
    case DisfluencyClass::kRestart: return "RS";
  }
  return "??";
}

bool DisfluencyFlags::Has(DisfluencyClass c) const {
  switch (c) {
    case DisfluencyClass::kFilledPause: return fp;
    case DisfluencyClass::kPartialWord: return pw;
    case DisfluencyClass::kRepetition: return rp;
    case DisfluencyClass::kRevision: return rv;
    case DisfluencyClass::kRestart: return rs;
  }
  return false;
}

void DisfluencyFlags::Set(DisfluencyClass c, bool value) {
  switch (c) {
    case DisfluencyClass::kFilledPause: fp = value; break;
    case DisfluencyClass::kPartialWord: pw = value; break;
    case DisfluencyClass::kRepetition: rp = value; break;
    case DisfluencyClass::kRevision: rv = value; break;
    case DisfluencyClass::kRestart: rs = value; break;
  }
}

FrameGrid::FrameGrid(double hop_s, double win_s) : hop_s_(hop_s), win_s_(win_s) {
  if (!(hop_s > 0.0) || !std::isfinite(hop_s)) {
    std::ostringstream os;
    os << "frame hop must be positive, got " << hop_s;
    throw ConfigError(os.str());
  }
  if (!(win_s >= hop_s) || !std::isfinite(win_s)) {
    std::ostringstream os;
    os << "frame window (" << win_s << ") must be >= hop (" << hop_s << ")";
    throw ConfigError(os.str());
  }
}

std::size_t FrameGrid::NumFrames(double duration_s) const {
  if (!(duration_s >= win_s_)) return 1;
  double steps = std::floor((duration_s - win_s_) / hop_s_ + kTimeEpsilon);
  return std::max<std::size_t>(1, static_cast<std::size_t>(steps) + 1);
}

namespace {

std::vector<std::size_t> SortedOrder(std::span<const Word> words) {
  std::vector<std::size_t> order(words.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].start_s != words[b].start_s)
      return words[a].start_s < words[b].start_s;
    if (words[a].end_s != words[b].end_s) return words[a].end_s < words[b].end_s;
    return a < b;
  });
  return order;
}

// First frame whose midpoint is >= t.
std::size_t FirstFrameAtOrAfter(const FrameGrid &grid, std::size_t nframes,
                                double t) {
  double x = std::ceil((t - grid.win_s() / 2) / grid.hop_s());
  std::size_t i = x <= 0.0 ? 0
                  : x >= static_cast<double>(nframes)
                      ? nframes
                      : static_cast<std::size_t>(x);
  while (i > 0 && grid.Midpoint(i - 1) >= t) --i;
  while (i < nframes && grid.Midpoint(i) < t) ++i;
  return i;
}

std::size_t NearestFrame(const FrameGrid &grid, std::size_t nframes,
                         double t) {
  double x = std::floor((t - grid.win_s() / 2) / grid.hop_s());
  long guess = x < 0.0 ? 0
               : x > static_cast<double>(nframes) ? static_cast<long>(nframes)
                                                  : static_cast<long>(x);
  long lo = std::max(0L, guess - 1);
  long hi = std::min(static_cast<long>(nframes) - 1, guess + 2);
  if (lo > hi) lo = hi = static_cast<long>(nframes) - 1;
  std::size_t best = static_cast<std::size_t>(lo);
  double best_dist = std::abs(t - grid.Midpoint(best));
  for (long j = lo + 1; j <= hi; ++j) {
    double d = std::abs(t - grid.Midpoint(static_cast<std::size_t>(j)));
    if (d < best_dist - kTimeEpsilon) {
      best = static_cast<std::size_t>(j);
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

WordProjection ProjectIntervals(std::span<const Word> words,
                                const FrameGrid &grid, std::size_t nframes) {
  WordProjection proj;
  proj.frames.assign(nframes, std::nullopt);
  if (nframes == 0 || words.empty()) return proj;

  const std::vector<std::size_t> order = SortedOrder(words);
  for (std::size_t w : order) {
    std::size_t i = FirstFrameAtOrAfter(grid, nframes, words[w].start_s);
    for (; i < nframes && grid.Midpoint(i) < words[w].end_s; ++i)
      proj.frames[i] = w;
  }

  std::vector<std::size_t> owned(words.size(), 0);
  for (const auto &f : proj.frames)
    if (f) ++owned[*f];

  for (std::size_t w : order) {
    if (owned[w] > 0) continue;
    double center = 0.5 * (words[w].start_s + words[w].end_s);
    std::size_t j = NearestFrame(grid, nframes, center);
    if (proj.frames[j]) {
      proj.collisions.push_back(w);
    } else {
      proj.frames[j] = w;
      owned[w] = 1;
    }
  }
  std::sort(proj.collisions.begin(), proj.collisions.end());
  return proj;
}

WordProjection ProjectWordsToFrames(const Segment &segment,
                                    const FrameGrid &grid) {
  return ProjectIntervals(segment.words, grid,
                          grid.NumFrames(segment.duration_s));
}

LabelTrack LabelsFromProjection(const WordProjection &projection,
                                std::span<const Word> words) {
  LabelTrack labels(projection.NumFrames());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (projection.frames[i]) labels[i] = words[*projection.frames[i]].flags;
  return labels;
}

LabelTrack FrameLabels(const Segment &segment, const FrameGrid &grid) {
  return LabelsFromProjection(ProjectWordsToFrames(segment, grid),
                              segment.words);
}

namespace {

std::string WordRef(const Segment &segment, std::size_t i) {
  std::ostringstream os;
  os << "word " << i << " (\"" << segment.words[i].text << "\")";
  return os.str();
}

bool CheckIndexList(const Segment &segment, const DisfluencyRegion &region,
                    const std::vector<std::size_t> &indices,
                    const char *what, Diagnostics *diags) {
  bool ok = true;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= segment.words.size()) {
      std::ostringstream os;
      os << "region '" << region.region_id << "': " << what << " index "
         << indices[k] << " out of range (" << segment.words.size()
         << " words)";
      Error(diags, segment.segment_id, os.str());
      ok = false;
    }
    if (k > 0 && indices[k] <= indices[k - 1]) {
      std::ostringstream os;
      os << "region '" << region.region_id << "': " << what
         << " indices are not strictly increasing";
      Error(diags, segment.segment_id, os.str());
      ok = false;
    }
  }
  return ok;
}

}  // namespace

bool ValidateSegment(const Segment &segment, Diagnostics *diags) {
  bool ok = true;
  auto fail = [&](const std::string &msg) {
    Error(diags, segment.segment_id, msg);
    ok = false;
  };

  if (segment.segment_id.empty()) fail("empty segment_id");
  if (!(segment.duration_s > 0.0) || !std::isfinite(segment.duration_s)) {
    std::ostringstream os;
    os << "duration_s must be positive, got " << segment.duration_s;
    fail(os.str());
  }

  const auto &words = segment.words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word &w = words[i];
    if (w.text.empty()) fail(WordRef(segment, i) + ": empty text");
    if (!std::isfinite(w.start_s) || !std::isfinite(w.end_s)) {
      fail(WordRef(segment, i) + ": non-finite timestamp");
      continue;
    }
    if (w.start_s < 0.0) {
      std::ostringstream os;
      os << WordRef(segment, i) << ": start_s " << w.start_s
         << " is negative";
      fail(os.str());
    }
    if (w.end_s < w.start_s) {
      std::ostringstream os;
      os << WordRef(segment, i) << ": end_s " << w.end_s
         << " precedes start_s " << w.start_s;
      fail(os.str());
    } else if (w.end_s == w.start_s) {
      Warn(diags, segment.segment_id,
           WordRef(segment, i) + ": zero-duration word");
    }
    if (w.end_s > segment.duration_s + kTimeEpsilon) {
      std::ostringstream os;
      os << WordRef(segment, i) << ": end_s " << w.end_s
         << " exceeds duration_s " << segment.duration_s;
      fail(os.str());
    }
    if (i > 0) {
      const Word &prev = words[i - 1];
      if (w.start_s < prev.start_s ||
          (w.start_s == prev.start_s && w.end_s < prev.end_s)) {
        fail(WordRef(segment, i) + ": words are not sorted by start time");
      } else if (prev.end_s > w.start_s + kTimeEpsilon) {
        Warn(diags, segment.segment_id,
             WordRef(segment, i) + ": overlaps the previous word");
      }
    }
  }

  std::unordered_set<std::string> region_ids;
  std::set<std::size_t> claimed;
  for (const auto &region : segment.regions) {
    if (!region_ids.insert(region.region_id).second)
      fail("duplicate region_id '" + region.region_id + "'");
    if (region.error_indices.empty())
      fail("region '" + region.region_id + "': empty error span");
    bool indices_ok =
        CheckIndexList(segment, region, region.error_indices, "error", diags) &
        CheckIndexList(segment, region, region.correction_indices,
                       "correction", diags);
    if (!indices_ok) {
      ok = false;
      continue;
    }
    std::set<std::size_t> mine;
    for (std::size_t i : region.error_indices) mine.insert(i);
    for (std::size_t i : region.correction_indices) {
      if (mine.count(i)) {
        std::ostringstream os;
        os << "region '" << region.region_id << "': word " << i
           << " is both error and correction";
        fail(os.str());
      }
      mine.insert(i);
    }
    for (std::size_t i : mine) {
      if (!claimed.insert(i).second) {
        std::ostringstream os;
        os << "region '" << region.region_id << "': word " << i
           << " belongs to another region";
        fail(os.str());
      }
    }
  }
  return ok;
}

std::size_t ClipToDuration(std::vector<Word> *words, double duration_s) {
  std::size_t changed = 0;
  for (Word &w : *words) {
    double s = std::clamp(w.start_s, 0.0, duration_s);
    double e = std::clamp(w.end_s, s, duration_s);
    if (s != w.start_s || e != w.end_s) ++changed;
    w.start_s = s;
    w.end_s = e;
  }
  return changed;
}

}  // namespace disfleval
