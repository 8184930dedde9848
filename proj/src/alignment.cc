// src/alignment.cc

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

#include "disfleval/alignment.h"

#include <algorithm>
#include <stdexcept>

namespace disfleval {

namespace {

// Row-major (ref.size()+1) x (hyp.size()+1) cost table.
std::vector<std::uint32_t> CostTable(std::span<const std::string> ref,
                                     std::span<const std::string> hyp) {
  const std::size_t n = ref.size(), m = hyp.size(), w = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * w);
  for (std::size_t j = 0; j <= m; ++j) cost[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cost[i * w] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t diag =
          cost[(i - 1) * w + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      std::uint32_t up = cost[(i - 1) * w + j] + 1;
      std::uint32_t left = cost[i * w + j - 1] + 1;
      cost[i * w + j] = std::min({diag, up, left});
    }
  }
  return cost;
}

}  // namespace

std::vector<EditOp> Align(std::span<const std::string> ref,
                          std::span<const std::string> hyp) {
  const std::size_t w = hyp.size() + 1;
  const std::vector<std::uint32_t> cost = CostTable(ref, hyp);

  std::vector<EditOp> ops;
  ops.reserve(std::max(ref.size(), hyp.size()));
  std::size_t i = ref.size(), j = hyp.size();
  while (i > 0 || j > 0) {
    const std::uint32_t here = cost[i * w + j];
    if (i > 0 && j > 0) {
      const std::uint32_t diag = cost[(i - 1) * w + j - 1];
      if (ref[i - 1] == hyp[j - 1] && diag == here) {
        ops.push_back({EditKind::kMatch, i - 1, j - 1});
        --i, --j;
        continue;
      }
      if (ref[i - 1] != hyp[j - 1] && diag + 1 == here) {
        ops.push_back({EditKind::kSubstitution, i - 1, j - 1});
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cost[(i - 1) * w + j] + 1 == here) {
      ops.push_back({EditKind::kDeletion, i - 1, std::nullopt});
      --i;
      continue;
    }
    ops.push_back({EditKind::kInsertion, std::nullopt, j - 1});
    --j;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::size_t EditDistance(std::span<const std::string> ref,
                         std::span<const std::string> hyp) {
  return CostTable(ref, hyp).back();
}

namespace {
std::optional<double> Rate(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

std::optional<double> EditSummary::Wer() const { return Rate(Errors(), nwords); }

std::optional<double> EditSummary::WerNondisfluent() const {
  return Rate(ErrorsNondisfluent(), nwords_n);
}

std::optional<double> EditSummary::WerDisfluent() const {
  return Rate(ErrorsDisfluent(), nwords_d);
}

EditSummary &EditSummary::operator+=(const EditSummary &o) {
  nwords += o.nwords;
  nwords_d += o.nwords_d;
  nwords_n += o.nwords_n;
  ins += o.ins;
  del += o.del;
  sub += o.sub;
  ins_n += o.ins_n;
  del_d += o.del_d;
  del_n += o.del_n;
  sub_d += o.sub_d;
  sub_n += o.sub_n;
  return *this;
}

EditSummary SummarizeEdits(std::span<const EditOp> ops,
                           std::span<const DisfluencyFlags> ref_flags) {
  EditSummary s;
  s.nwords = ref_flags.size();
  for (const auto &f : ref_flags) (f.IsDisfluent() ? s.nwords_d : s.nwords_n)++;

  auto disfluent = [&](const EditOp &op) {
    if (!op.ref_index || *op.ref_index >= ref_flags.size())
      throw std::invalid_argument("edit op references a missing ref word");
    return ref_flags[*op.ref_index].IsDisfluent();
  };
  std::size_t ref_ops = 0;
  for (const EditOp &op : ops) {
    if (op.ref_index) ++ref_ops;
    switch (op.kind) {
      case EditKind::kMatch:
        disfluent(op);
        break;
      case EditKind::kSubstitution:
        ++s.sub;
        (disfluent(op) ? s.sub_d : s.sub_n)++;
        break;
      case EditKind::kDeletion:
        ++s.del;
        (disfluent(op) ? s.del_d : s.del_n)++;
        break;
      case EditKind::kInsertion:
        ++s.ins;
        ++s.ins_n;
        break;
    }
  }
  if (ref_ops != ref_flags.size())
    throw std::invalid_argument("edit ops cover " + std::to_string(ref_ops) +
                                " ref words, flags cover " +
                                std::to_string(ref_flags.size()));
  return s;
}

EditSummary ScoreWords(const Segment &ref,
                       std::span<const std::string> hyp_tokens) {
  std::vector<std::string> ref_tokens;
  std::vector<DisfluencyFlags> flags;
  ref_tokens.reserve(ref.words.size());
  flags.reserve(ref.words.size());
  for (const Word &w : ref.words) {
    ref_tokens.push_back(w.text);
    flags.push_back(w.flags);
  }
  return SummarizeEdits(Align(ref_tokens, hyp_tokens), flags);
}

}  // namespace disfleval
