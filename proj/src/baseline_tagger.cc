// src/baseline_tagger.cc

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

#include "disfleval/baseline_tagger.h"

#include <algorithm>

#include "disfleval/annotation.h"

namespace disfleval {

std::vector<DisfluencyFlags> TagDisfluencies(
    std::span<const std::string> tokens, std::size_t max_span) {
  const std::size_t n = tokens.size();
  std::vector<DisfluencyFlags> flags(n);
  for (std::size_t i = 0; i < n; ++i) {
    flags[i].fp = IsFilledPause(tokens[i]);
    flags[i].pw = IsPartialWord(tokens[i]);
  }

  std::size_t i = 0;
  while (i < n) {
    std::size_t matched = 0;
    for (std::size_t len = std::min(max_span, (n - i) / 2); len >= 1; --len) {
      if (std::equal(tokens.begin() + i, tokens.begin() + i + len,
                     tokens.begin() + i + len)) {
        matched = len;
        break;
      }
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    for (std::size_t k = i; k < i + matched; ++k) flags[k].rp = true;
    i += matched;
  }
  return flags;
}

}  // namespace disfleval
