/* Copyright 2026 The roughpath Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Command-line driver: subcommands, configuration resolution and exit codes.
//
// Configuration is resolved as: command defaults, then the --config JSON
// document, then explicit flags. The resolved document (without the output
// directory) is embedded in every report together with its FNV-1a hash.

#ifndef ROUGHPATH_CLI_HPP
#define ROUGHPATH_CLI_HPP

#include <iosfwd>

namespace roughpath::cli {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kSchemaError = 2,      // bad flags, config keys or input documents
  kUnreadableInput = 3,  // missing or unparsable files
  kNonConvergent = 4,    // the extension did not settle before max_order
  kNonMonotone = 5,      // control not strictly increasing where a balance point was needed
  kInternalError = 6,
};

// Errors go to `err` as one JSON object per line:
//   {"error": "<kind>", "code": <exit code>, "message": "..."}
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace roughpath::cli

#endif  // ROUGHPATH_CLI_HPP
