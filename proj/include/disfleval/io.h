// include/disfleval/io.h

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

#ifndef DISFLEVAL_IO_H_
#define DISFLEVAL_IO_H_

// File formats.
//
// Corpus file (JSON lines, one segment per line):
//   {"segment_id": "...", "duration_s": 2.5,
//    "words": [{"text": "...", "start_s": 0.1, "end_s": 0.3,
//               "role": "outside"|"error"|"correction", "region_id": "r1"}]}
// A pre-labeled segment gives "flags": [fp, pw, rp, rv, rs] on every word
// (role/region_id are then optional). Words with role error/correction but
// no region_id are grouped by adjacency: a run of error words followed by a
// run of correction words forms one region.
//
// Hypothesis file: {"segment_id": "...", "words": [{"text", "start_s",
// "end_s"}]}.
//
// Prediction file: {"segment_id": "...", "words": [{"text", "start_s",
// "end_s", "flags"}]} or {"segment_id": "...", "frames": [[fp, pw, rp, rv,
// rs], ...]}. Flag values are 0/1 or booleans.
//
// Feature matrix file: "dim=<d> nframes=<n>" followed by n lines of d
// space-separated decimals. Word-rate feature file: JSON lines
// {"text", "start_s", "end_s", "vec": [...]}.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "disfleval/annotation.h"
#include "disfleval/corpus.h"
#include "disfleval/fusion.h"
#include "disfleval/scoring.h"

namespace disfleval {

enum class TokenRole { kOutside, kError, kCorrection };

struct CorpusWord {
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;
  std::optional<TokenRole> role;
  std::optional<std::string> region_id;
  std::optional<DisfluencyFlags> flags;

  friend bool operator==(const CorpusWord &, const CorpusWord &) = default;
};

struct CorpusRecord {
  std::string segment_id;
  double duration_s = 0.0;
  std::vector<CorpusWord> words;

  /// True when every word carries flags.
  bool IsPreLabeled() const;
  friend bool operator==(const CorpusRecord &, const CorpusRecord &) = default;
};

struct HypRecord {
  std::string segment_id;
  std::vector<Word> words;  // flags unused
};

/// One non-blank input line and its 1-based line number.
struct NumberedLine {
  std::size_t lineno = 0;
  std::string text;
};

/// Reads all non-blank lines. Throws ConfigError if the file cannot be
/// opened.
std::vector<NumberedLine> ReadLines(const std::string &path);
std::vector<NumberedLine> ReadLines(std::istream &is);

/// Parsers throw FormatError prefixed with "<where>: ".
CorpusRecord ParseCorpusRecord(std::string_view line, std::string_view where);
HypRecord ParseHypRecord(std::string_view line, std::string_view where);
PredictionTrack ParsePrediction(std::string_view line, std::string_view where);
WordVector ParseWordVector(std::string_view line, std::string_view where);

/// Single-line JSON, no trailing newline.
std::string SerializeCorpusRecord(const CorpusRecord &record);
std::string SerializePrediction(const PredictionTrack &track);
std::string SerializeWordVector(const WordVector &word);

/// Turns a corpus record into a labeled, normalized Segment. Raw records go
/// through LabelSegment(); pre-labeled records keep their flags and only get
/// their text normalized. Throws AnnotationError.
Segment RecordToSegment(const CorpusRecord &record, const CanonMap &canon,
                        Diagnostics *diags = nullptr);

/// Pre-labeled record for a labeled segment (regions become role/region_id).
CorpusRecord SegmentToRecord(const Segment &segment);

/// Normalizes hypothesis tokens (full normalization), dropping empties with
/// a warning.
std::vector<Word> NormalizeHypWords(const HypRecord &hyp,
                                    const CanonMap &canon,
                                    Diagnostics *diags = nullptr);

FeatureMatrix ReadFeatureMatrix(std::istream &is, std::string_view source);
void WriteFeatureMatrix(std::ostream &os, const FeatureMatrix &m);

/// Shortest decimal that reads back to the same double.
std::string FormatShortest(double v);

}  // namespace disfleval

#endif  // DISFLEVAL_IO_H_
