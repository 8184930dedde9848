// src/io.cc

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

#include "disfleval/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rapidjson/document.h"
#include "rapidjson/error/en.h"

namespace disfleval {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void Fail(std::string_view where, const std::string &what) {
  std::string msg(where);
  msg += ": ";
  msg += what;
  throw FormatError(msg);
}

using JsonValue = rapidjson::Value;

constexpr unsigned kParseFlags =
    rapidjson::kParseValidateEncodingFlag | rapidjson::kParseFullPrecisionFlag;

void ParseObject(std::string_view line, std::string_view where,
                 rapidjson::Document *doc) {
  doc->Parse<kParseFlags>(line.data(), line.size());
  if (doc->HasParseError())
    Fail(where, std::string("invalid JSON: ") +
                    rapidjson::GetParseError_En(doc->GetParseError()) +
                    " at byte " + std::to_string(doc->GetErrorOffset()));
  if (!doc->IsObject()) Fail(where, "expected a JSON object");
}

const JsonValue *Find(const JsonValue &obj, const char *key) {
  auto it = obj.FindMember(key);
  return it == obj.MemberEnd() ? nullptr : &it->value;
}

const JsonValue &Field(const JsonValue &obj, const char *key,
                       std::string_view where) {
  const JsonValue *v = Find(obj, key);
  if (!v) Fail(where, std::string("missing field '") + key + "'");
  return *v;
}

std::string AsString(const JsonValue &v) {
  return std::string(v.GetString(), v.GetStringLength());
}

std::string GetString(const JsonValue &obj, const char *key,
                      std::string_view where) {
  const JsonValue &v = Field(obj, key, where);
  if (!v.IsString()) Fail(where, std::string("'") + key + "' must be a string");
  return AsString(v);
}

double GetNumber(const JsonValue &obj, const char *key, std::string_view where) {
  const JsonValue &v = Field(obj, key, where);
  if (!v.IsNumber()) Fail(where, std::string("'") + key + "' must be a number");
  double d = v.GetDouble();
  if (!std::isfinite(d)) Fail(where, std::string("'") + key + "' is not finite");
  return d;
}

const JsonValue &GetArray(const JsonValue &obj, const char *key,
                          std::string_view where) {
  const JsonValue &v = Field(obj, key, where);
  if (!v.IsArray()) Fail(where, std::string("'") + key + "' must be an array");
  return v;
}

// `where` is a callable yielding the location; it only runs on failure.
template <typename Where>
DisfluencyFlags ParseFlagsAt(const JsonValue &v, Where where) {
  if (!v.IsArray() || v.Size() != kNumClasses)
    Fail(where(), "flags must be an array of 5 values [fp, pw, rp, rv, rs]");
  DisfluencyFlags f;
  for (rapidjson::SizeType c = 0; c < kNumClasses; ++c) {
    const JsonValue &x = v[c];
    bool b;
    if (x.IsBool()) {
      b = x.GetBool();
    } else if (x.IsInt64() && (x.GetInt64() == 0 || x.GetInt64() == 1)) {
      b = x.GetInt64() == 1;
    } else {
      Fail(where(), "flag values must be 0, 1, true or false");
    }
    f.Set(kAllClasses[c], b);
  }
  return f;
}

DisfluencyFlags ParseFlags(const JsonValue &v, std::string_view where) {
  return ParseFlagsAt(v, [where] { return where; });
}

ordered_json FlagsJson(const DisfluencyFlags &f) {
  ordered_json a = ordered_json::array();
  for (auto c : kAllClasses) a.push_back(f.Has(c) ? 1 : 0);
  return a;
}

std::string WordWhere(std::string_view where, std::size_t i) {
  return std::string(where) + ": word " + std::to_string(i);
}

Word ParseTimedWord(const JsonValue &w, const std::string &where) {
  if (!w.IsObject()) Fail(where, "expected an object");
  Word word;
  word.text = GetString(w, "text", where);
  word.start_s = GetNumber(w, "start_s", where);
  word.end_s = GetNumber(w, "end_s", where);
  return word;
}

const char *RoleName(TokenRole r) {
  switch (r) {
    case TokenRole::kOutside: return "outside";
    case TokenRole::kError: return "error";
    case TokenRole::kCorrection: return "correction";
  }
  return "outside";
}

}  // namespace

bool CorpusRecord::IsPreLabeled() const {
  if (words.empty()) return false;
  for (const auto &w : words)
    if (!w.flags) return false;
  return true;
}

std::vector<NumberedLine> ReadLines(std::istream &is) {
  std::vector<NumberedLine> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back({lineno, std::move(line)});
  }
  return lines;
}

std::vector<NumberedLine> ReadLines(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  return ReadLines(is);
}

CorpusRecord ParseCorpusRecord(std::string_view line, std::string_view where) {
  rapidjson::Document j;
  ParseObject(line, where, &j);
  CorpusRecord rec;
  rec.segment_id = GetString(j, "segment_id", where);
  rec.duration_s = GetNumber(j, "duration_s", where);
  const JsonValue &words = GetArray(j, "words", where);
  for (rapidjson::SizeType i = 0; i < words.Size(); ++i) {
    const std::string ww = WordWhere(where, i);
    Word tw = ParseTimedWord(words[i], ww);
    CorpusWord cw{std::move(tw.text), tw.start_s, tw.end_s, {}, {}, {}};
    if (const JsonValue *it = Find(words[i], "role")) {
      if (!it->IsString()) Fail(ww, "'role' must be a string");
      const std::string role = AsString(*it);
      if (role == "outside")
        cw.role = TokenRole::kOutside;
      else if (role == "error")
        cw.role = TokenRole::kError;
      else if (role == "correction")
        cw.role = TokenRole::kCorrection;
      else
        Fail(ww, "unknown role '" + role + "'");
    }
    if (const JsonValue *it = Find(words[i], "region_id")) {
      if (it->IsString())
        cw.region_id = AsString(*it);
      else if (it->IsInt64())
        cw.region_id = std::to_string(it->GetInt64());
      else if (!it->IsNull())
        Fail(ww, "'region_id' must be a string");
    }
    if (const JsonValue *it = Find(words[i], "flags"))
      cw.flags = ParseFlags(*it, ww);
    rec.words.push_back(std::move(cw));
  }
  return rec;
}

std::string SerializeCorpusRecord(const CorpusRecord &rec) {
  ordered_json j;
  j["segment_id"] = rec.segment_id;
  j["duration_s"] = rec.duration_s;
  ordered_json words = ordered_json::array();
  for (const auto &w : rec.words) {
    ordered_json o;
    o["text"] = w.text;
    o["start_s"] = w.start_s;
    o["end_s"] = w.end_s;
    if (w.role) o["role"] = RoleName(*w.role);
    if (w.region_id) o["region_id"] = *w.region_id;
    if (w.flags) o["flags"] = FlagsJson(*w.flags);
    words.push_back(std::move(o));
  }
  j["words"] = std::move(words);
  return j.dump();
}

HypRecord ParseHypRecord(std::string_view line, std::string_view where) {
  rapidjson::Document j;
  ParseObject(line, where, &j);
  HypRecord rec;
  rec.segment_id = GetString(j, "segment_id", where);
  const JsonValue &words = GetArray(j, "words", where);
  for (rapidjson::SizeType i = 0; i < words.Size(); ++i)
    rec.words.push_back(ParseTimedWord(words[i], WordWhere(where, i)));
  return rec;
}

PredictionTrack ParsePrediction(std::string_view line, std::string_view where) {
  rapidjson::Document j;
  ParseObject(line, where, &j);
  PredictionTrack track;
  track.segment_id = GetString(j, "segment_id", where);
  const bool has_words = j.HasMember("words"), has_frames = j.HasMember("frames");
  if (has_words == has_frames)
    Fail(where, "expected exactly one of 'words' or 'frames'");
  if (has_words) {
    std::vector<Word> words;
    const JsonValue &arr = GetArray(j, "words", where);
    for (rapidjson::SizeType i = 0; i < arr.Size(); ++i) {
      const std::string ww = WordWhere(where, i);
      Word w = ParseTimedWord(arr[i], ww);
      w.flags = ParseFlags(Field(arr[i], "flags", ww), ww);
      words.push_back(std::move(w));
    }
    track.data = std::move(words);
  } else {
    LabelTrack frames;
    const JsonValue &arr = GetArray(j, "frames", where);
    frames.reserve(arr.Size());
    for (rapidjson::SizeType i = 0; i < arr.Size(); ++i)
      frames.push_back(ParseFlagsAt(arr[i], [&] {
        return std::string(where) + ": frame " + std::to_string(i);
      }));
    track.data = std::move(frames);
  }
  return track;
}

std::string SerializePrediction(const PredictionTrack &track) {
  ordered_json j;
  j["segment_id"] = track.segment_id;
  if (const auto *words = std::get_if<std::vector<Word>>(&track.data)) {
    ordered_json arr = ordered_json::array();
    for (const auto &w : *words) {
      ordered_json o;
      o["text"] = w.text;
      o["start_s"] = w.start_s;
      o["end_s"] = w.end_s;
      o["flags"] = FlagsJson(w.flags);
      arr.push_back(std::move(o));
    }
    j["words"] = std::move(arr);
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto &f : std::get<LabelTrack>(track.data))
      arr.push_back(FlagsJson(f));
    j["frames"] = std::move(arr);
  }
  return j.dump();
}

WordVector ParseWordVector(std::string_view line, std::string_view where) {
  rapidjson::Document j;
  ParseObject(line, where, &j);
  WordVector wv;
  wv.text = GetString(j, "text", where);
  wv.start_s = GetNumber(j, "start_s", where);
  wv.end_s = GetNumber(j, "end_s", where);
  const JsonValue &vec = GetArray(j, "vec", where);
  wv.vec.reserve(vec.Size());
  for (const auto &x : vec.GetArray()) {
    if (!x.IsNumber()) Fail(where, "'vec' must hold numbers");
    wv.vec.push_back(x.GetDouble());
  }
  return wv;
}

std::string SerializeWordVector(const WordVector &wv) {
  ordered_json j;
  j["text"] = wv.text;
  j["start_s"] = wv.start_s;
  j["end_s"] = wv.end_s;
  j["vec"] = wv.vec;
  return j.dump();
}

namespace {

std::vector<DisfluencyRegion> BuildRegions(const CorpusRecord &rec) {
  auto where = [&](std::size_t i) {
    return "segment '" + rec.segment_id + "', word " + std::to_string(i) + ": ";
  };
  std::vector<DisfluencyRegion> regions;
  std::map<std::string, std::size_t> named;
  // Open adjacency-grouped region: index into `regions`, and whether it has
  // reached its correction part.
  std::optional<std::size_t> open;
  bool open_in_correction = false;
  std::size_t auto_count = 0;

  for (std::size_t i = 0; i < rec.words.size(); ++i) {
    const CorpusWord &w = rec.words[i];
    const TokenRole role = w.role.value_or(TokenRole::kOutside);
    if (role == TokenRole::kOutside) {
      if (w.region_id)
        throw AnnotationError(where(i) + "outside word carries a region_id");
      open.reset();
      continue;
    }
    if (w.region_id) {
      open.reset();
      auto [it, inserted] = named.try_emplace(*w.region_id, regions.size());
      if (inserted) regions.push_back({*w.region_id, {}, {}});
      auto &r = regions[it->second];
      (role == TokenRole::kError ? r.error_indices : r.correction_indices)
          .push_back(i);
      continue;
    }
    if (role == TokenRole::kError) {
      if (!open || open_in_correction) {
        open = regions.size();
        open_in_correction = false;
        regions.push_back({"auto" + std::to_string(++auto_count), {}, {}});
      }
      regions[*open].error_indices.push_back(i);
    } else {
      if (!open)
        throw AnnotationError(where(i) +
                              "correction word without a preceding error span");
      open_in_correction = true;
      regions[*open].correction_indices.push_back(i);
    }
  }
  for (const auto &r : regions) {
    if (r.error_indices.empty())
      throw AnnotationError("segment '" + rec.segment_id + "', region '" +
                            r.region_id + "': empty error span");
    if (r.region_id.rfind("auto", 0) == 0 && named.count(r.region_id) &&
        named.at(r.region_id) != static_cast<std::size_t>(&r - regions.data()))
      throw AnnotationError("segment '" + rec.segment_id + "': region id '" +
                            r.region_id + "' clashes with a generated id");
  }
  return regions;
}

}  // namespace

Segment RecordToSegment(const CorpusRecord &rec, const CanonMap &canon,
                        Diagnostics *diags) {
  bool any_flags = false;
  for (const auto &w : rec.words) any_flags = any_flags || w.flags.has_value();
  const bool prelabeled = rec.IsPreLabeled();
  if (any_flags && !prelabeled)
    throw AnnotationError("segment '" + rec.segment_id +
                          "': some but not all words carry flags");

  Segment raw;
  raw.segment_id = rec.segment_id;
  raw.duration_s = rec.duration_s;
  raw.regions = BuildRegions(rec);
  raw.words.reserve(rec.words.size());
  for (const auto &w : rec.words)
    raw.words.push_back(
        {w.text, w.start_s, w.end_s, w.flags.value_or(DisfluencyFlags{})});

  if (!prelabeled) return LabelSegment(raw, canon, diags);

  // Pre-labeled: keep flags, normalize text, drop empty tokens.
  Segment out;
  out.segment_id = raw.segment_id;
  out.duration_s = raw.duration_s;
  std::vector<std::optional<std::size_t>> new_index(raw.words.size());
  for (std::size_t i = 0; i < raw.words.size(); ++i) {
    auto tok = NormalizeToken(raw.words[i].text, canon, true);
    if (!tok) {
      Warn(diags, rec.segment_id,
           "word " + std::to_string(i) + " (\"" + raw.words[i].text +
               "\") is empty after normalization; dropped");
      continue;
    }
    new_index[i] = out.words.size();
    Word w = raw.words[i];
    w.text = std::move(*tok);
    out.words.push_back(std::move(w));
  }
  for (const auto &r : raw.regions) {
    DisfluencyRegion nr{r.region_id, {}, {}};
    for (std::size_t i : r.error_indices)
      if (new_index[i]) nr.error_indices.push_back(*new_index[i]);
    for (std::size_t i : r.correction_indices)
      if (new_index[i]) nr.correction_indices.push_back(*new_index[i]);
    if (!nr.error_indices.empty()) out.regions.push_back(std::move(nr));
  }
  return out;
}

CorpusRecord SegmentToRecord(const Segment &segment) {
  CorpusRecord rec;
  rec.segment_id = segment.segment_id;
  rec.duration_s = segment.duration_s;
  for (const Word &w : segment.words)
    rec.words.push_back({w.text, w.start_s, w.end_s,
                         segment.regions.empty()
                             ? std::nullopt
                             : std::optional<TokenRole>(TokenRole::kOutside),
                         std::nullopt, w.flags});
  for (const auto &r : segment.regions) {
    for (std::size_t i : r.error_indices) {
      rec.words[i].role = TokenRole::kError;
      rec.words[i].region_id = r.region_id;
    }
    for (std::size_t i : r.correction_indices) {
      rec.words[i].role = TokenRole::kCorrection;
      rec.words[i].region_id = r.region_id;
    }
  }
  return rec;
}

std::vector<Word> NormalizeHypWords(const HypRecord &hyp,
                                    const CanonMap &canon, Diagnostics *diags) {
  std::vector<Word> out;
  out.reserve(hyp.words.size());
  for (std::size_t i = 0; i < hyp.words.size(); ++i) {
    auto tok = NormalizeToken(hyp.words[i].text, canon, true);
    if (!tok) {
      Warn(diags, hyp.segment_id,
           "hypothesis word " + std::to_string(i) + " (\"" +
               hyp.words[i].text + "\") is empty after normalization; dropped");
      continue;
    }
    Word w = hyp.words[i];
    w.text = std::move(*tok);
    out.push_back(std::move(w));
  }
  return out;
}

std::string FormatShortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

FeatureMatrix ReadFeatureMatrix(std::istream &is, std::string_view source) {
  std::string line;
  std::size_t lineno = 0;
  auto where = [&]() { return std::string(source) + ":" + std::to_string(lineno); };

  if (!std::getline(is, line)) Fail(std::string(source), "empty feature file");
  ++lineno;
  std::size_t dim = 0, rows = 0;
  {
    std::istringstream hs(line);
    std::string a, b, extra;
    hs >> a >> b;
    auto read_key = [&](const std::string &tok, const char *key,
                        std::size_t *out) {
      const std::string prefix = std::string(key) + "=";
      if (tok.rfind(prefix, 0) != 0) return false;
      const char *first = tok.data() + prefix.size();
      const char *last = tok.data() + tok.size();
      auto res = std::from_chars(first, last, *out);
      return res.ec == std::errc() && res.ptr == last && first != last;
    };
    if (!read_key(a, "dim", &dim) || !read_key(b, "nframes", &rows) ||
        (hs >> extra))
      Fail(where(), "expected header 'dim=<d> nframes=<n>'");
  }

  std::vector<double> data;
  data.reserve(dim * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(is, line)) Fail(where(), "expected " + std::to_string(rows) + " rows, file ends early");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const char *p = line.data(), *end = line.data() + line.size();
    std::size_t count = 0;
    while (true) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      double v;
      auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc() ||
          (res.ptr != end && *res.ptr != ' ' && *res.ptr != '\t'))
        Fail(where(), "malformed number");
      if (!std::isfinite(v)) Fail(where(), "non-finite value");
      data.push_back(v);
      ++count;
      p = res.ptr;
    }
    if (count != dim)
      Fail(where(), "expected " + std::to_string(dim) + " values, got " +
                        std::to_string(count));
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      Fail(where(), "unexpected content after the last row");
  }
  return FeatureMatrix(rows, dim, std::move(data));
}

void WriteFeatureMatrix(std::ostream &os, const FeatureMatrix &m) {
  os << "dim=" << m.dim() << " nframes=" << m.rows() << '\n';
  std::string line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    line.clear();
    auto row = m.Row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line.push_back(' ');
      line += FormatShortest(row[c]);
    }
    line.push_back('\n');
    os << line;
  }
}

}  // namespace disfleval
