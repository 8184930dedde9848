// include/disfleval/report.h

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

#ifndef DISFLEVAL_REPORT_H_
#define DISFLEVAL_REPORT_H_

// JSON and markdown reports. Every rate is rendered with exactly four
// decimals (round half to even); the JSON value is the number those four
// decimals denote, so both formats carry identical values. Undefined rates
// are null in JSON and "n/a" in markdown.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disfleval/alignment.h"
#include "disfleval/annotation.h"
#include "disfleval/frame_metrics.h"
#include "disfleval/scoring.h"

namespace disfleval {

enum class ReportFormat { kJson, kMarkdown };

/// Fixed four decimals, ties to even on the exact binary value.
std::string FormatFixed4(double v);
std::string FormatFixed4(const std::optional<double> &v);

struct RunInfo {
  std::size_t segments_scored = 0;
  std::size_t segments_skipped = 0;
};

std::string RenderWerReport(const EditSummary &s, const RunInfo &info,
                            ReportFormat format);

std::string RenderFerReport(const FrameErrorSummary &s, const RunInfo &info,
                            const FrameGrid &grid, const FerOptions &options,
                            ReportFormat format);

std::string RenderScoreReport(const DetectionReport &r, const RunInfo &info,
                              ReportFormat format);

std::string RenderOverlapReport(const OverlapResult &r,
                                std::span<const std::string> system_names,
                                const OverlapOptions &options,
                                const RunInfo &info, ReportFormat format);

std::string RenderStatsReport(const CorpusStats &s, const FrameGrid &grid,
                              ReportFormat format);

struct ValidationSummary {
  std::size_t segments = 0;
  std::size_t invalid = 0;
  std::size_t errors = 0;
  std::size_t warnings = 0;
};

std::string RenderValidationReport(const ValidationSummary &s,
                                   ReportFormat format);

}  // namespace disfleval

#endif  // DISFLEVAL_REPORT_H_
