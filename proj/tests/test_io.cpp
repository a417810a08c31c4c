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
#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "roughpath/error.hpp"
#include "roughpath/io.hpp"

namespace roughpath {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ROUGHPATH_DATA_DIR;

PiecewiseLinearPath parse(const std::string& text) {
  std::istringstream in(text);
  return parse_path_csv(in);
}

TEST(Io, ParsesPathCsv) {
  const auto path = parse("time,x1,x2\n0,0,0\n0.5,1,0\n1,1,1\n");
  EXPECT_EQ(path.dim(), 2u);
  EXPECT_EQ(path.samples(), 3u);
  EXPECT_EQ(path.point(2)[1], 1.0);
}

TEST(Io, RejectsBadPathCsv) {
  EXPECT_THROW(parse(""), SchemaError);
  EXPECT_THROW(parse("t,x1\n0,0\n1,1\n"), SchemaError);
  EXPECT_THROW(parse("time,x2\n0,0\n1,1\n"), SchemaError);
  EXPECT_THROW(parse("time,x1\n0,0\n1\n"), SchemaError);
  EXPECT_THROW(parse("time,x1\n0,0\n0.5,1\n"), SchemaError);  // does not end at 1
}

TEST(Io, PathRoundTrips) {
  const auto path = read_path(kData / "two_segment.csv");
  std::ostringstream csv;
  write_path_csv(csv, path);
  const auto back = parse(csv.str());
  const auto from_json = path_from_json(path_to_json(path));
  for (std::size_t i = 0; i < path.samples(); ++i) {
    EXPECT_EQ(back.times()[i], path.times()[i]);
    EXPECT_EQ(from_json.times()[i], path.times()[i]);
    for (std::size_t k = 0; k < path.dim(); ++k) {
      EXPECT_EQ(back.point(i)[k], path.point(i)[k]);
      EXPECT_EQ(from_json.point(i)[k], path.point(i)[k]);
    }
  }
  const auto json_file = read_path(kData / "two_segment.json");
  EXPECT_EQ(json_file.samples(), path.samples());
}

TEST(Io, MissingFileIsUnreadable) {
  EXPECT_THROW(read_path(kData / "no_such_file.csv"), UnreadableInput);
  EXPECT_THROW(read_json(kData / "no_such_file.json"), UnreadableInput);
}

TEST(Io, TensorRoundTrips) {
  auto t = TruncatedTensor::identity(2, 2);
  t[{1}] = 0.25;
  t[{2, 1}] = -1.0 / 3.0;
  const Json doc = tensor_to_json(t);
  EXPECT_EQ(doc["dim"], 2);
  EXPECT_EQ(doc["depth"], 2);
  EXPECT_TRUE(tensor_from_json(doc) == t);
  EXPECT_TRUE(tensor_from_json(Json::parse(doc.dump())) == t);
  Json bad = doc;
  bad["levels"].erase(2);
  EXPECT_THROW(tensor_from_json(bad), SchemaError);
}

TEST(Io, ReadsCdeProblem) {
  const auto problem = read_cde_problem(kData / "rotation.json");
  EXPECT_EQ(problem.driver_dim(), 1u);
  EXPECT_EQ(problem.state_dim(), 2u);
  EXPECT_EQ(problem.A()[0](0, 1), -1.0);
  EXPECT_EQ(problem.driver().samples(), 4u);
  EXPECT_NEAR(problem.operator_norm(), 1.0, 1e-12);
}

TEST(Io, InlineDriverAndShapeErrors) {
  Json doc = Json::parse(R"({"A": [[[0, 1], [1, 0]]], "x0": [1, 2],
                             "driver": {"times": [0, 1], "points": [[0], [2]]}})");
  EXPECT_EQ(problem_from_json(doc, kData).driver().dim(), 1u);
  doc["x0"] = {1, 2, 3};
  EXPECT_THROW(problem_from_json(doc, kData), SchemaError);
}

TEST(Io, FnvReferenceVectors) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
  EXPECT_EQ(hex64(fnv1a64("foobar")), "85944171f73967e8");
}

TEST(Io, FormatDoubleRoundTrips) {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 1.7976931348623157e308}) {
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v) << format_double(v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Io, CsvReportQuotesAndStamps) {
  CsvReport report({"name", "value"});
  report.add_row({"plain", "1"});
  report.add_row({"with, comma", "say \"hi\""});
  EXPECT_THROW(report.add_row({"short"}), InvalidInput);
  ReportStamp stamp{Json{{"command", "x"}, {"seed", 5}}, 5};
  std::ostringstream out;
  report.write(out, stamp);
  const std::string h = stamp.config_hash();
  EXPECT_EQ(h, hex64(fnv1a64(stamp.config.dump())));
  const std::string expected = "schema,config_hash,seed,name,value\n"
                               "1," + h + ",5,plain,1\n"
                               "1," + h + ",5,\"with, comma\",\"say \"\"hi\"\"\"\n";
  EXPECT_EQ(out.str(), expected);

  const Json summary = stamped_summary(stamp, Json{{"passed", true}});
  EXPECT_EQ(summary["schema"], kSchemaVersion);
  EXPECT_EQ(summary["config_hash"], h);
  EXPECT_EQ(summary["seed"], 5);
  EXPECT_EQ(summary["config"], stamp.config);
  EXPECT_EQ(summary["passed"], true);
}

}  // namespace
}  // namespace roughpath
