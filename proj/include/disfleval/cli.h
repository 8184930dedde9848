// include/disfleval/cli.h

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

#ifndef DISFLEVAL_CLI_H_
#define DISFLEVAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace disfleval {

/// Entry point of the disfleval command line; `args` excludes the program
/// name. Reports go to `out` (or --out), diagnostics to `err`.
/// Returns 0 on success, 1 when validation errors were found, 2 on usage
/// errors.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace disfleval

#endif  // DISFLEVAL_CLI_H_
