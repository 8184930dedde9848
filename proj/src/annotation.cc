// src/annotation.cc

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

#include "disfleval/annotation.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace disfleval {

namespace {

bool IsStrippedPunct(char c) {
  return c == '.' || c == '?' || c == '!' || c == ',' || c == '-';
}

char AsciiLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Lowercase and punctuation-free: the form canon keys and values must have.
bool IsPlainForm(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (IsStrippedPunct(c) || AsciiLower(c) != c) return false;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace

CanonMap CanonMap::Default() {
  return CanonMap({{"umm", "um"}, {"uhm", "um"}, {"ok", "okay"}});
}

CanonMap::CanonMap(std::vector<std::pair<std::string, std::string>> pairs)
    : pairs_(std::move(pairs)) {
  std::unordered_set<std::string> keys;
  for (const auto &[surface, canonical] : pairs_) {
    if (!IsPlainForm(surface))
      throw ConfigError("canon map key '" + surface +
                        "' must be lowercase without . ? ! , -");
    if (!keys.insert(surface).second)
      throw ConfigError("duplicate canon map key '" + surface + "'");
  }
  for (const auto &[surface, canonical] : pairs_) {
    if (!IsPlainForm(canonical))
      throw ConfigError("canonical form '" + canonical + "' for '" + surface +
                        "' must be lowercase without . ? ! , -");
    if (keys.count(canonical))
      throw ConfigError("canonical form '" + canonical +
                        "' is itself a canon map key");
  }
}

CanonMap CanonMap::Parse(std::istream &is, std::string_view source_name,
                         const CanonMap &base) {
  std::vector<std::pair<std::string, std::string>> pairs = base.pairs_;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t tab = line.find('\t');
    std::ostringstream where;
    where << source_name << ":" << lineno << ": ";
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw FormatError(where.str() +
                        "expected exactly two tab-separated columns");
    std::string surface = line.substr(0, tab);
    std::string canonical = line.substr(tab + 1);
    if (surface.empty() || canonical.empty())
      throw FormatError(where.str() + "empty column");
    pairs.emplace_back(std::move(surface), std::move(canonical));
    try {
      CanonMap check(pairs);
    } catch (const ConfigError &e) {
      throw FormatError(where.str() + e.what());
    }
  }
  return CanonMap(std::move(pairs));
}

CanonMap CanonMap::Load(const std::string &path, const CanonMap &base) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open canon map '" + path + "'");
  return Parse(is, path, base);
}

std::string_view CanonMap::Apply(std::string_view token) const {
  for (const auto &[surface, canonical] : pairs_)
    if (surface == token) return canonical;
  return token;
}

std::optional<std::string> NormalizeToken(std::string_view raw,
                                          const CanonMap &canon,
                                          bool strip_trailing_hyphen) {
  bool partial = !strip_trailing_hyphen && !raw.empty() && raw.back() == '-';
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    if (!IsStrippedPunct(c)) out.push_back(AsciiLower(c));
  if (out.empty()) return std::nullopt;
  if (partial) {
    out.push_back('-');
    return out;
  }
  return std::string(canon.Apply(out));
}

bool IsFilledPause(std::string_view token) {
  return token == "um" || token == "uh";
}

bool IsPartialWord(std::string_view token) {
  return token.size() > 1 && token.back() == '-';
}

namespace {

// Token equality used for region comparison. `error` is a labeling-phase
// token, `correction` fully normalized.
bool ErrorTokenMatches(std::string_view error, std::string_view correction) {
  if (IsPartialWord(error)) {
    std::string_view stem = error.substr(0, error.size() - 1);
    return correction.substr(0, stem.size()) == stem;
  }
  return error == correction;
}

void CheckRegions(const Segment &raw) {
  std::set<std::size_t> claimed;
  std::unordered_set<std::string> ids;
  auto where = [&](const DisfluencyRegion &r) {
    return "segment '" + raw.segment_id + "', region '" + r.region_id + "': ";
  };
  for (const auto &r : raw.regions) {
    if (!ids.insert(r.region_id).second)
      throw AnnotationError(where(r) + "duplicate region id");
    if (r.error_indices.empty())
      throw AnnotationError(where(r) + "empty error span");
    for (const auto *list : {&r.error_indices, &r.correction_indices}) {
      for (std::size_t k = 0; k < list->size(); ++k) {
        std::size_t i = (*list)[k];
        if (i >= raw.words.size())
          throw AnnotationError(where(r) + "word index " + std::to_string(i) +
                                " out of range");
        if (k > 0 && i <= (*list)[k - 1])
          throw AnnotationError(where(r) +
                                "word indices are not strictly increasing");
        if (!claimed.insert(i).second)
          throw AnnotationError(where(r) + "word " + std::to_string(i) +
                                " is claimed twice (overlapping regions)");
      }
    }
  }
}

}  // namespace

Segment LabelSegment(const Segment &raw, const CanonMap &canon,
                     Diagnostics *diags) {
  CheckRegions(raw);

  Segment out;
  out.segment_id = raw.segment_id;
  out.duration_s = raw.duration_s;

  // Labeling-phase tokens keep the partial-word hyphen.
  std::vector<std::string> label_tokens;
  std::vector<std::optional<std::size_t>> new_index(raw.words.size());
  for (std::size_t i = 0; i < raw.words.size(); ++i) {
    const Word &w = raw.words[i];
    std::optional<std::string> tok = NormalizeToken(w.text, canon, false);
    if (!tok) {
      Warn(diags, raw.segment_id,
           "word " + std::to_string(i) + " (\"" + w.text +
               "\") is empty after normalization; dropped");
      continue;
    }
    new_index[i] = out.words.size();
    label_tokens.push_back(*tok);
    Word nw = w;
    nw.flags = DisfluencyFlags{};
    out.words.push_back(std::move(nw));
  }

  for (std::size_t i = 0; i < out.words.size(); ++i) {
    if (IsFilledPause(label_tokens[i])) out.words[i].flags.fp = true;
    if (IsPartialWord(label_tokens[i])) out.words[i].flags.pw = true;
  }

  auto remap = [&](const std::vector<std::size_t> &idx) {
    std::vector<std::size_t> r;
    for (std::size_t i : idx)
      if (new_index[i]) r.push_back(*new_index[i]);
    return r;
  };

  for (const auto &region : raw.regions) {
    DisfluencyRegion nr{region.region_id, remap(region.error_indices),
                        remap(region.correction_indices)};
    if (nr.error_indices.empty()) {
      Warn(diags, raw.segment_id,
           "region '" + region.region_id +
               "' has no error words left after normalization; dropped");
      continue;
    }
    bool repetition = false;
    if (!nr.correction_indices.empty() &&
        nr.correction_indices.size() == nr.error_indices.size()) {
      repetition = true;
      for (std::size_t k = 0; k < nr.error_indices.size() && repetition; ++k) {
        std::string_view err = label_tokens[nr.error_indices[k]];
        std::string corr =
            NormalizeToken(label_tokens[nr.correction_indices[k]], canon, true)
                .value_or("");
        repetition = ErrorTokenMatches(err, corr);
      }
    }
    for (std::size_t i : nr.error_indices) {
      DisfluencyFlags &f = out.words[i].flags;
      if (nr.correction_indices.empty())
        f.rs = true;
      else if (repetition)
        f.rp = true;
      else
        f.rv = true;
    }
    out.regions.push_back(std::move(nr));
  }

  for (std::size_t i = 0; i < out.words.size(); ++i)
    out.words[i].text = *NormalizeToken(label_tokens[i], canon, true);
  return out;
}

void CorpusStats::Add(const Segment &segment, const FrameGrid &grid) {
  ++segments;
  words += segment.words.size();
  std::array<bool, kNumClasses> present = {};
  for (const Word &w : segment.words) {
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      if (w.flags.Has(kAllClasses[c])) {
        ++words_with[c];
        present[c] = true;
      }
    }
  }
  for (std::size_t c = 0; c < kNumClasses; ++c)
    if (present[c]) ++segments_with[c];

  LabelTrack labels = FrameLabels(segment, grid);
  frames += labels.size();
  for (const auto &f : labels)
    for (std::size_t c = 0; c < kNumClasses; ++c)
      if (f.Has(kAllClasses[c])) ++frames_with[c];
}

CorpusStats &CorpusStats::operator+=(const CorpusStats &other) {
  segments += other.segments;
  words += other.words;
  frames += other.frames;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    segments_with[c] += other.segments_with[c];
    words_with[c] += other.words_with[c];
    frames_with[c] += other.frames_with[c];
  }
  return *this;
}

namespace {
double Ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

double CorpusStats::UtteranceProportion(DisfluencyClass c) const {
  return Ratio(segments_with[static_cast<int>(c)], segments);
}

double CorpusStats::WordProportion(DisfluencyClass c) const {
  return Ratio(words_with[static_cast<int>(c)], words);
}

double CorpusStats::FrameProportion(DisfluencyClass c) const {
  return Ratio(frames_with[static_cast<int>(c)], frames);
}

CorpusStats ComputeCorpusStats(std::span<const Segment> segments,
                               const FrameGrid &grid, Diagnostics *diags) {
  CorpusStats stats;
  if (segments.empty()) {
    Warn(diags, "", "empty corpus; all proportions are reported as 0");
    return stats;
  }
  for (const Segment &s : segments) stats.Add(s, grid);
  return stats;
}

}  // namespace disfleval
