// include/disfleval/fusion.h

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

#ifndef DISFLEVAL_FUSION_H_
#define DISFLEVAL_FUSION_H_

// Temporal alignment of word-rate and frame-rate feature streams: word
// vectors are copied onto the frames their word occupies (zero vectors on
// wordless frames) and the result is concatenated column-wise with a
// frame-rate stream.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "disfleval/corpus.h"

namespace disfleval {

/// Row-major nframes x dim matrix.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t dim)
      : rows_(rows), dim_(dim), data_(rows * dim, 0.0) {}
  /// Throws DimensionError if data.size() != rows * dim.
  FeatureMatrix(std::size_t rows, std::size_t dim, std::vector<double> data);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<double> Row(std::size_t r) {
    return {data_.data() + r * dim_, dim_};
  }
  std::span<const double> Row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }
  const std::vector<double> &data() const { return data_; }

  friend bool operator==(const FeatureMatrix &,
                         const FeatureMatrix &) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// A word with its word-level representation.
struct WordVector {
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;
  std::vector<double> vec;

  friend bool operator==(const WordVector &, const WordVector &) = default;
};

/// Frame-rate matrix with grid.NumFrames(duration_s) rows. Every vector must
/// have `dim` entries (DimensionError otherwise).
FeatureMatrix UpsampleWordFeatures(std::span<const WordVector> words,
                                   const FrameGrid &grid, double duration_s,
                                   std::size_t dim);

/// Maximum row-count difference reconciled by truncation.
inline constexpr std::size_t kMaxRowMismatch = 2;

/// Row-wise concatenation, `a` columns first. Row counts differing by at most
/// kMaxRowMismatch are truncated to the shorter stream with a warning; larger
/// differences throw DimensionError.
FeatureMatrix ConcatStreams(const FeatureMatrix &a, const FeatureMatrix &b,
                            Diagnostics *diags = nullptr);

}  // namespace disfleval

#endif  // DISFLEVAL_FUSION_H_
