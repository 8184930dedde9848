// include/disfleval/alignment.h

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

#ifndef DISFLEVAL_ALIGNMENT_H_
#define DISFLEVAL_ALIGNMENT_H_

// Levenshtein word alignment and disfluency-decomposed word error rates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disfleval/corpus.h"

namespace disfleval {

enum class EditKind { kMatch, kSubstitution, kDeletion, kInsertion };

struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<std::size_t> ref_index;  // absent for insertions
  std::optional<std::size_t> hyp_index;  // absent for deletions

  friend bool operator==(const EditOp &, const EditOp &) = default;
};

/// Minimal unit-cost alignment of `ref` against `hyp`, in left-to-right
/// order. Among optimal alignments the backtrace (from the end) prefers
/// match, then substitution, then deletion, then insertion.
std::vector<EditOp> Align(std::span<const std::string> ref,
                          std::span<const std::string> hyp);

/// Plain edit distance (cost of the alignment above).
std::size_t EditDistance(std::span<const std::string> ref,
                         std::span<const std::string> hyp);

/// Edit counts split by the disfluency of the reference word. Insertions are
/// always attributed to the nondisfluent side.
struct EditSummary {
  std::uint64_t nwords = 0;
  std::uint64_t nwords_d = 0;
  std::uint64_t nwords_n = 0;
  std::uint64_t ins = 0;
  std::uint64_t del = 0;
  std::uint64_t sub = 0;
  std::uint64_t ins_n = 0;
  std::uint64_t del_d = 0;
  std::uint64_t del_n = 0;
  std::uint64_t sub_d = 0;
  std::uint64_t sub_n = 0;

  std::uint64_t Errors() const { return ins + del + sub; }
  std::uint64_t ErrorsNondisfluent() const { return ins_n + del_n + sub_n; }
  std::uint64_t ErrorsDisfluent() const { return del_d + sub_d; }

  /// (I + D + S) / nwords; nullopt when nwords == 0.
  std::optional<double> Wer() const;
  /// (I_n + D_n + S_n) / nwords_n.
  std::optional<double> WerNondisfluent() const;
  /// (D_d + S_d) / nwords_d.
  std::optional<double> WerDisfluent() const;

  EditSummary &operator+=(const EditSummary &other);
  friend bool operator==(const EditSummary &, const EditSummary &) = default;
};

/// Counts for one aligned pair. `ref_flags[i]` belongs to reference word i.
/// Throws std::invalid_argument if an op points outside `ref_flags`.
EditSummary SummarizeEdits(std::span<const EditOp> ops,
                           std::span<const DisfluencyFlags> ref_flags);

/// Align + SummarizeEdits for a labeled reference segment and hypothesis
/// tokens.
EditSummary ScoreWords(const Segment &ref,
                       std::span<const std::string> hyp_tokens);

}  // namespace disfleval

#endif  // DISFLEVAL_ALIGNMENT_H_
