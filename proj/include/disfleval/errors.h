// include/disfleval/errors.h

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

#ifndef DISFLEVAL_ERRORS_H_
#define DISFLEVAL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace disfleval {

/// Invalid grid, canon map, or other run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error/correction annotations that cannot be reconciled with the word list.
class AnnotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A segment or track that violates a structural invariant (timestamps,
/// ordering, frame counts).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. The message carries "<source>:<line>: ".
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Feature vectors or matrices with incompatible shapes.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kWarning;
  std::string segment_id;  // empty for corpus-level diagnostics
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

inline void Warn(Diagnostics *diags, std::string segment_id,
                 std::string message) {
  if (diags != nullptr)
    diags->push_back({Severity::kWarning, std::move(segment_id),
                      std::move(message)});
}

inline void Error(Diagnostics *diags, std::string segment_id,
                  std::string message) {
  if (diags != nullptr)
    diags->push_back({Severity::kError, std::move(segment_id),
                      std::move(message)});
}

inline bool HasErrors(const Diagnostics &diags) {
  for (const auto &d : diags)
    if (d.severity == Severity::kError) return true;
  return false;
}

}  // namespace disfleval

#endif  // DISFLEVAL_ERRORS_H_
