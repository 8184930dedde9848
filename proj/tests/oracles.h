// tests/oracles.h

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

#ifndef DISFLEVAL_TESTS_ORACLES_H_
#define DISFLEVAL_TESTS_ORACLES_H_

// Slow reference implementations used only by tests. They walk every frame
// and every word explicitly and share no code with the library beyond the
// plain data types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "disfleval/corpus.h"
#include "disfleval/fusion.h"

namespace disfleval {
namespace oracle {

// Plain recursion over (i, j) with no memoization. Equal heads are matched
// outright, which never loses optimality.
template <typename Seq>
std::size_t EditDistance(const Seq &a, const Seq &b, std::size_t i = 0,
                         std::size_t j = 0) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) return EditDistance(a, b, i + 1, j + 1);
  std::size_t best = 1 + EditDistance(a, b, i + 1, j);
  best = std::min(best, 1 + EditDistance(a, b, i, j + 1));
  best = std::min(best, 1 + EditDistance(a, b, i + 1, j + 1));
  return best;
}

inline std::size_t NumFrames(double duration, double hop, double win) {
  if (duration < win) return 1;
  std::size_t n = 1;
  // Count how many further hops still fit a whole window.
  while ((n * hop) + win <= duration + 1e-9) ++n;
  return n;
}

inline double Midpoint(std::size_t i, double hop, double win) {
  return static_cast<double>(i) * hop + win / 2;
}

// Frame -> word index, walking frames one by one.
inline std::vector<std::optional<std::size_t>> Project(
    const std::vector<Word> &words, double hop, double win,
    std::size_t nframes) {
  auto key = [&](std::size_t w) {
    return std::make_tuple(words[w].start_s, words[w].end_s, w);
  };
  std::vector<std::optional<std::size_t>> frames(nframes);
  for (std::size_t i = 0; i < nframes; ++i) {
    double m = Midpoint(i, hop, win);
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (!(words[w].start_s <= m && m < words[w].end_s)) continue;
      if (!frames[i] || key(*frames[i]) < key(w)) frames[i] = w;
    }
  }

  std::vector<std::size_t> order(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) order[w] = w;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  std::vector<bool> owns(words.size(), false);
  for (const auto &f : frames)
    if (f) owns[*f] = true;
  for (std::size_t w : order) {
    if (owns[w] || nframes == 0) continue;
    double c = (words[w].start_s + words[w].end_s) / 2;
    std::size_t best = 0;
    double best_d = std::fabs(c - Midpoint(0, hop, win));
    for (std::size_t i = 1; i < nframes; ++i) {
      double d = std::fabs(c - Midpoint(i, hop, win));
      if (d < best_d - 1e-9) {
        best = i;
        best_d = d;
      }
    }
    if (!frames[best]) {
      frames[best] = w;
      owns[w] = true;
    }
  }
  return frames;
}

struct FerCounts {
  std::uint64_t n = 0, e = 0, d = 0, nd = 0, e_d = 0, e_n = 0;
};

inline FerCounts Fer(const Segment &ref, std::vector<Word> hyp, double hop,
                     double win, bool ignore_silence) {
  for (auto &w : hyp) {
    w.start_s = std::clamp(w.start_s, 0.0, ref.duration_s);
    w.end_s = std::clamp(w.end_s, 0.0, ref.duration_s);
  }
  std::size_t nframes = NumFrames(ref.duration_s, hop, win);
  auto rp = Project(ref.words, hop, win, nframes);
  auto hp = Project(hyp, hop, win, nframes);
  FerCounts c;
  for (std::size_t i = 0; i < nframes; ++i) {
    if (ignore_silence && !rp[i]) continue;
    std::string rt = rp[i] ? "w:" + ref.words[*rp[i]].text : "<none>";
    std::string ht = hp[i] ? "w:" + hyp[*hp[i]].text : "<none>";
    bool disfluent = rp[i] && ref.words[*rp[i]].flags.IsDisfluent();
    bool err = rt != ht;
    ++c.n;
    c.e += err;
    if (disfluent) {
      ++c.d;
      c.e_d += err;
    } else {
      ++c.nd;
      c.e_n += err;
    }
  }
  return c;
}

// Frame-rate matrix built by copying each frame's word vector.
inline std::vector<std::vector<double>> Upsample(
    const std::vector<WordVector> &words, double hop, double win,
    double duration, std::size_t dim) {
  std::vector<Word> timed;
  for (const auto &w : words) timed.push_back({w.text, w.start_s, w.end_s, {}});
  std::size_t nframes = NumFrames(duration, hop, win);
  auto proj = Project(timed, hop, win, nframes);
  std::vector<std::vector<double>> rows(nframes, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < nframes; ++i)
    if (proj[i]) rows[i] = words[*proj[i]].vec;
  return rows;
}

}  // namespace oracle
}  // namespace disfleval

#endif  // DISFLEVAL_TESTS_ORACLES_H_
