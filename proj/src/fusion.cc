// src/fusion.cc

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

#include "disfleval/fusion.h"

#include <algorithm>
#include <sstream>

namespace disfleval {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t dim,
                             std::vector<double> data)
    : rows_(rows), dim_(dim), data_(std::move(data)) {
  if (data_.size() != rows_ * dim_) {
    std::ostringstream os;
    os << "feature matrix " << rows_ << "x" << dim_ << " given "
       << data_.size() << " values";
    throw DimensionError(os.str());
  }
}

FeatureMatrix UpsampleWordFeatures(std::span<const WordVector> words,
                                   const FrameGrid &grid, double duration_s,
                                   std::size_t dim) {
  std::vector<Word> timed;
  timed.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].vec.size() != dim) {
      std::ostringstream os;
      os << "word " << i << " (\"" << words[i].text << "\") has a "
         << words[i].vec.size() << "-dim vector, expected " << dim;
      throw DimensionError(os.str());
    }
    timed.push_back({words[i].text, words[i].start_s, words[i].end_s, {}});
  }
  const WordProjection proj =
      ProjectIntervals(timed, grid, grid.NumFrames(duration_s));
  FeatureMatrix out(proj.NumFrames(), dim);
  for (std::size_t r = 0; r < proj.NumFrames(); ++r)
    if (proj.frames[r])
      std::copy(words[*proj.frames[r]].vec.begin(),
                words[*proj.frames[r]].vec.end(), out.Row(r).begin());
  return out;
}

FeatureMatrix ConcatStreams(const FeatureMatrix &a, const FeatureMatrix &b,
                            Diagnostics *diags) {
  const std::size_t rows = std::min(a.rows(), b.rows());
  const std::size_t diff = std::max(a.rows(), b.rows()) - rows;
  if (diff > kMaxRowMismatch) {
    std::ostringstream os;
    os << "cannot concatenate streams with " << a.rows() << " and "
       << b.rows() << " rows";
    throw DimensionError(os.str());
  }
  if (diff > 0) {
    std::ostringstream os;
    os << "streams have " << a.rows() << " and " << b.rows()
       << " rows; truncated to " << rows;
    Warn(diags, "", os.str());
  }
  FeatureMatrix out(rows, a.dim() + b.dim());
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = out.Row(r);
    auto ra = a.Row(r), rb = b.Row(r);
    std::copy(ra.begin(), ra.end(), dst.begin());
    std::copy(rb.begin(), rb.end(), dst.begin() + a.dim());
  }
  return out;
}

}  // namespace disfleval
