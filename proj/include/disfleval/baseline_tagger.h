// include/disfleval/baseline_tagger.h

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

#ifndef DISFLEVAL_BASELINE_TAGGER_H_
#define DISFLEVAL_BASELINE_TAGGER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "disfleval/corpus.h"

namespace disfleval {

/// Lexical disfluency tagger used as a runnable weak baseline.
///
/// Input tokens must be labeling-phase normalized (partial-word hyphens
/// kept). Filled pauses and partial words are tagged exactly as the
/// annotation rules do. A repetition is tagged on the first copy of two
/// adjacent identical spans of 1..max_span tokens, scanning left to right and
/// trying the longest span first; tagged spans never overlap. Revisions and
/// restarts are never predicted.
std::vector<DisfluencyFlags> TagDisfluencies(
    std::span<const std::string> tokens, std::size_t max_span = 3);

}  // namespace disfleval

#endif  // DISFLEVAL_BASELINE_TAGGER_H_
