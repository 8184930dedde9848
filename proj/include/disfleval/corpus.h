// include/disfleval/corpus.h

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

#ifndef DISFLEVAL_CORPUS_H_
#define DISFLEVAL_CORPUS_H_

// Core transcript types, the frame grid, and word->frame projection.
//
// Every downstream computation (frame labels, frame error rates, detection
// scoring, feature upsampling) goes through ProjectWordsToFrames(), so that
// "which word occupies frame i" has exactly one definition in the toolkit.
//
// Projection rule: frame i spans [i*hop, i*hop + win) and is assigned to the
// word whose [start_s, end_s) contains the frame midpoint i*hop + win/2.
// When several words contain the same midpoint (overlapping timestamps), the
// word that starts last wins. A word that ends up with no frame at all is
// placed on the single frame whose midpoint is nearest its center (ties go to
// the earlier frame), but only if that frame is silent; otherwise the word is
// listed in WordProjection::collisions.
//
// Timestamps are consumed exactly as given. Any silence padding added around
// the audio must already be reflected in the timestamps and durations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disfleval/errors.h"

namespace disfleval {

enum class DisfluencyClass : int {
  kFilledPause = 0,
  kPartialWord = 1,
  kRepetition = 2,
  kRevision = 3,
  kRestart = 4,
};

inline constexpr std::size_t kNumClasses = 5;

/// Flag order used in files: [fp, pw, rp, rv, rs].
inline constexpr std::array<DisfluencyClass, kNumClasses> kAllClasses = {
    DisfluencyClass::kFilledPause, DisfluencyClass::kPartialWord,
    DisfluencyClass::kRepetition, DisfluencyClass::kRevision,
    DisfluencyClass::kRestart};

/// Short class name: "FP", "PW", "RP", "RV" or "RS".
std::string_view ClassName(DisfluencyClass c);

/// Multi-label disfluency annotation of a word or frame.
struct DisfluencyFlags {
  bool fp = false;
  bool pw = false;
  bool rp = false;
  bool rv = false;
  bool rs = false;

  bool IsDisfluent() const { return fp || pw || rp || rv || rs; }
  bool Has(DisfluencyClass c) const;
  void Set(DisfluencyClass c, bool value = true);

  friend bool operator==(const DisfluencyFlags &,
                         const DisfluencyFlags &) = default;
};

struct Word {
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;
  DisfluencyFlags flags;
  friend bool operator==(const Word &, const Word &) = default;
};

struct DisfluencyRegion {
  std::string region_id;
  std::vector<std::size_t> error_indices;
  std::vector<std::size_t> correction_indices;
};

struct Segment {
  std::string segment_id;
  double duration_s = 0.0;
  std::vector<Word> words;
  std::vector<DisfluencyRegion> regions;
};

/// Tolerance for time comparisons that must absorb decimal round-off
/// (frame counting and midpoint-distance ties).
inline constexpr double kTimeEpsilon = 1e-9;

/// Frame timeline: hop and window length in seconds.
class FrameGrid {
 public:
  static constexpr double kDefaultHop = 0.020;
  static constexpr double kDefaultWin = 0.025;

  /// 20 ms hop, 25 ms window.
  FrameGrid() = default;
  /// Throws ConfigError unless hop_s > 0 and win_s >= hop_s.
  FrameGrid(double hop_s, double win_s);

  double hop_s() const { return hop_s_; }
  double win_s() const { return win_s_; }

  /// max(1, floor((duration - win) / hop) + 1), or 1 when duration < win.
  std::size_t NumFrames(double duration_s) const;
  double FrameStart(std::size_t i) const { return i * hop_s_; }
  double Midpoint(std::size_t i) const { return i * hop_s_ + win_s_ / 2; }

 private:
  double hop_s_ = kDefaultHop;
  double win_s_ = kDefaultWin;
};

/// Result of projecting a word list onto the frame grid.
struct WordProjection {
  /// One entry per frame: index into the word list, or nullopt for silence.
  std::vector<std::optional<std::size_t>> frames;
  /// Words that own no frame because their fallback frame was already taken.
  std::vector<std::size_t> collisions;

  std::size_t NumFrames() const { return frames.size(); }
};

/// Frame-level label track.
using LabelTrack = std::vector<DisfluencyFlags>;

/// Projects arbitrary timed words onto `nframes` frames. Words need not be
/// sorted; the result only depends on (start, end, index).
WordProjection ProjectIntervals(std::span<const Word> words,
                                const FrameGrid &grid, std::size_t nframes);

WordProjection ProjectWordsToFrames(const Segment &segment,
                                    const FrameGrid &grid);

/// Per-frame flags of the projected word; all-false on wordless frames.
LabelTrack FrameLabels(const Segment &segment, const FrameGrid &grid);

/// Same as FrameLabels() for an already computed projection.
LabelTrack LabelsFromProjection(const WordProjection &projection,
                                std::span<const Word> words);

/// Checks timestamps, word order and region structure. Hard problems are
/// appended as errors, suspicious-but-legal ones (zero-length words,
/// overlapping word intervals) as warnings. Returns true when no error was
/// found.
bool ValidateSegment(const Segment &segment, Diagnostics *diags);

/// Clips every interval in `words` to [0, duration_s] in place. Returns the
/// number of words that were changed.
std::size_t ClipToDuration(std::vector<Word> *words, double duration_s);

}  // namespace disfleval

#endif  // DISFLEVAL_CORPUS_H_
