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
// File formats: paths (CSV and JSON), tensors, linear CDE problems, and the
// versioned report files written by the command-line driver.
//
// Path CSV:   header "time,x1,...,xd", then one sample per row.
// Path JSON:  {"times": [...], "points": [[x1, ..., xd], ...]}
// Tensor:     {"dim": d, "depth": N, "levels": [[1], [..d..], [..d^2..], ...]}
// CDE:        {"A": [A_1, ..., A_d], "x0": [...], "driver": <path JSON or file name>}
//             where each A_i is a list of rows; a driver file name is
//             resolved against the problem file's directory.

#ifndef ROUGHPATH_IO_HPP
#define ROUGHPATH_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "roughpath/cde.hpp"
#include "roughpath/path.hpp"
#include "roughpath/tensor.hpp"

namespace roughpath {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

PiecewiseLinearPath parse_path_csv(std::istream& in);
PiecewiseLinearPath path_from_json(const Json& doc);
// Dispatches on the extension (.csv or .json).
PiecewiseLinearPath read_path(const std::filesystem::path& file);

void write_path_csv(std::ostream& out, const PiecewiseLinearPath& path);
Json path_to_json(const PiecewiseLinearPath& path);

Json tensor_to_json(const TruncatedTensor& tensor);
TruncatedTensor tensor_from_json(const Json& doc);

LinearCdeProblem problem_from_json(const Json& doc, const std::filesystem::path& base_dir);
LinearCdeProblem read_cde_problem(const std::filesystem::path& file);

Json read_json(const std::filesystem::path& file);

// Shortest decimal that round-trips; "inf", "-inf" and "nan" otherwise.
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Fields embedded in every output file.
struct ReportStamp {
  Json config;  // resolved configuration
  std::uint64_t seed = 0;
  std::string config_hash() const;  // FNV-1a of config.dump()
};

// A CSV table whose first columns are schema, config_hash and seed.
class CsvReport {
 public:
  explicit CsvReport(std::vector<std::string> columns);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const noexcept { return rows_.size(); }
  void write(std::ostream& out, const ReportStamp& stamp) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// {"schema", "config_hash", "seed", "config", ...body}
Json stamped_summary(const ReportStamp& stamp, const Json& body);

// Writes report.csv and summary.json into dir (created if needed).
void write_reports(const std::filesystem::path& dir, const ReportStamp& stamp,
                   const CsvReport& report, const Json& body);

}  // namespace roughpath

#endif  // ROUGHPATH_IO_HPP
