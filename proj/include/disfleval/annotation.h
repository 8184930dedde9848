// include/disfleval/annotation.h

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

#ifndef DISFLEVAL_ANNOTATION_H_
#define DISFLEVAL_ANNOTATION_H_

// Token normalization and the rule-based mapping from error/correction
// annotations to disfluency classes.

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "disfleval/corpus.h"

namespace disfleval {

/// Whole-token spelling canonicalization (surface -> canonical), applied to
/// the lowercased, punctuation-free token.
class CanonMap {
 public:
  /// umm -> um, uhm -> um, ok -> okay.
  static CanonMap Default();

  CanonMap() = default;
  /// Throws ConfigError on duplicate keys or on a canonical form that is not
  /// itself stable under normalization (e.g. a form that is also a key).
  explicit CanonMap(std::vector<std::pair<std::string, std::string>> pairs);

  /// Reads "surface<TAB>canonical" lines; blank lines and '#' comments are
  /// skipped. Pairs are appended to (and may not redefine) the defaults when
  /// `base` is given. Throws FormatError with the line number.
  static CanonMap Parse(std::istream &is, std::string_view source_name,
                        const CanonMap &base = CanonMap());
  static CanonMap Load(const std::string &path,
                       const CanonMap &base = CanonMap());

  /// Canonical form of `token`, or `token` itself.
  std::string_view Apply(std::string_view token) const;

  const std::vector<std::pair<std::string, std::string>> &pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

/// Lowercases `raw` and removes the characters . ? ! , - before applying the
/// canon map. With strip_trailing_hyphen == false a token that ends in '-'
/// keeps exactly one trailing hyphen (partial-word marker). Returns nullopt
/// when nothing is left.
std::optional<std::string> NormalizeToken(std::string_view raw,
                                          const CanonMap &canon,
                                          bool strip_trailing_hyphen);

/// True for the filled-pause tokens "um" and "uh".
bool IsFilledPause(std::string_view token);

/// True when a labeling-phase token carries the partial-word hyphen.
bool IsPartialWord(std::string_view token);

/// Labels a segment whose words still carry raw tokens and whose regions
/// hold the error/correction structure. Rules (multi-label):
///   um/uh                                     -> FP
///   token ending in '-'                       -> PW
///   error span equal to its correction        -> RP on the error words
///   error span differing from its correction  -> RV on the error words
///   error span without correction             -> RS on the error words
/// Region texts are compared token by token after full normalization; a
/// partial error token ("h-") matches a correction token that starts with its
/// stem ("how"). Tokens are fully normalized afterwards. Tokens that
/// normalize to nothing are dropped with a warning.
///
/// Throws AnnotationError for empty error spans, out-of-range or overlapping
/// indices.
Segment LabelSegment(const Segment &raw, const CanonMap &canon,
                     Diagnostics *diags = nullptr);

/// Class frequencies at utterance, word and frame level. Accumulation is
/// plain count addition, so partial results may be merged in any order.
struct CorpusStats {
  std::uint64_t segments = 0;
  std::uint64_t words = 0;
  std::uint64_t frames = 0;
  std::array<std::uint64_t, kNumClasses> segments_with = {};
  std::array<std::uint64_t, kNumClasses> words_with = {};
  std::array<std::uint64_t, kNumClasses> frames_with = {};

  void Add(const Segment &segment, const FrameGrid &grid);
  CorpusStats &operator+=(const CorpusStats &other);

  /// Fractions; 0 when the denominator is 0.
  double UtteranceProportion(DisfluencyClass c) const;
  double WordProportion(DisfluencyClass c) const;
  double FrameProportion(DisfluencyClass c) const;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

/// Warns (once, corpus-level) when `segments` is empty.
CorpusStats ComputeCorpusStats(std::span<const Segment> segments,
                               const FrameGrid &grid,
                               Diagnostics *diags = nullptr);

}  // namespace disfleval

#endif  // DISFLEVAL_ANNOTATION_H_
