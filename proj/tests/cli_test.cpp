// Copyright 2026 The Atlas Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atlas/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "test_data.hpp"

namespace atlas::cli {
namespace {

using testing::data_path;
using testing::example_theta;
using testing::read_data;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST_CASE("enumerate") {
  const Result verified = invoke({"enumerate", "7", "--stage", "verified"});
  CHECK(verified.code == kExitOk);
  CHECK(lines(verified.out) == 1 + 9);
  const Result filters = invoke({"enumerate", "6", "--stage", "filters"});
  CHECK(filters.code == kExitOk);
  CHECK(lines(filters.out) == 1 + 20);
  CHECK(invoke({"enumerate", "1"}).code == kExitUsage);
  CHECK(invoke({"enumerate", "10"}).code == kExitUsage);
  CHECK(invoke({"enumerate", "6", "--stage", "sideways"}).code == kExitUsage);
  CHECK(invoke({"enumerate", "6", "--frobnicate"}).code == kExitUsage);
}

TEST_CASE("enumerate json is byte-stable and versioned") {
  const Result a = invoke({"enumerate", "6", "--format", "json"});
  const Result b = invoke({"enumerate", "6", "--format", "json", "--jobs", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "atlas/1");
  CHECK(j["entries"].size() == 20);
  const Result csv = invoke({"enumerate", "5", "--format", "csv"});
  CHECK(lines(csv.out) == 1 + 5);
}

TEST_CASE("budget exhaustion exits 4") {
  CHECK(invoke({"enumerate", "6", "--budget", "3"}).code == kExitBudget);
  const Result count = invoke({"count", "--order", "5", "--theta", "();();()", "--budget", "10"});
  CHECK(count.code == kExitBudget);
  CHECK(count.err.find("nodes") != std::string::npos);
}

TEST_CASE("diff-paper") {
  const Result five = invoke({"diff-paper", "5"});
  CHECK(five.code == kExitOk);
  const Result six = invoke({"diff-paper", "6"});
  CHECK(six.code == kExitOk);
  const auto j = nlohmann::json::parse(six.out);
  CHECK(j["match"] == true);
  CHECK(j["refuted_by_search"].size() == 3);
  CHECK(invoke({"diff-paper", "12"}).code == kExitMissingFixture);
  CHECK(invoke({"diff-paper", "10"}).code == kExitUsage);
}

TEST_CASE("check") {
  const std::string ex6 = data_path("example_6.txt");
  CHECK(invoke({"check", "--square", ex6, "--theta", "(0 1 2 3 4 5);(0 1 2)(3 4 5);(0 1)(2 3)(4 5)"}).code ==
        kExitOk);
  CHECK(invoke({"check", "--square", ex6, "--theta", "();();()"}).code == kExitOk);
  const std::string z2 = data_path("cyclic_2.txt");
  const Result no = invoke({"check", "--square", z2, "--theta", "(0 1);(0 1);(0 1)"});
  CHECK(no.code == kExitFalse);
  CHECK(no.out == "not an autotopism\n");
  CHECK(invoke({"check", "--square", z2, "--theta", "(0 1);(0 1"}).code == kExitUsage);
  CHECK(invoke({"check", "--square", z2, "--theta", "(0 5);();()"}).code == kExitUsage);
  CHECK(invoke({"check", "--square", "/nonexistent", "--theta", "();();()"}).code == kExitUsage);
  CHECK(invoke({"check", "--square", data_path("not_latin.txt"), "--theta", "();();()"}).code == kExitUsage);
}

TEST_CASE("count") {
  CHECK(invoke({"count", "--order", "2", "--theta", "(0 1);(0 1);()"}).out == "2\n");
  CHECK(invoke({"count", "--order", "3", "--theta", "();();()"}).out == "12\n");
  const Result zero = invoke({"count", "--order", "6", "--structure", "0,3,0,0,0,0|0,3,0,0,0,0|0,3,0,0,0,0"});
  CHECK(zero.code == kExitOk);
  CHECK(zero.out == "0\n");
  CHECK(invoke({"count", "--theta", "();();()"}).code == kExitUsage);
  CHECK(invoke({"count", "--order", "3"}).code == kExitUsage);
  CHECK(invoke({"count", "--order", "4", "--structure", "0,1|0,1|2,0"}).code == kExitUsage);
  CHECK(invoke({"count", "--order", "2", "--theta", "();();()", "--structure", "0,1|0,1|2,0"}).code == kExitUsage);
}

TEST_CASE("apply") {
  const Result fig = invoke({"apply", "--square", data_path("fig1_square.txt"), "--theta", "(0 1)(2 3);(1 2);()"});
  CHECK(fig.code == kExitOk);
  CHECK(fig.out == read_data("fig1_image.txt"));
  const Result same = invoke({"apply", "--square", data_path("fig1_square.txt"), "--theta", "();();()"});
  CHECK(same.out == read_data("fig1_square.txt"));
  CHECK(invoke({"apply", "--square", data_path("fig1_square.txt"), "--theta", "();()"}).code == kExitUsage);
}

TEST_CASE("explain") {
  const Result r = invoke({"explain", "0,1,0,1,0,0|6,0,0,0,0,0|0,1,0,1,0,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("R-THM4") != std::string::npos);
  CHECK(invoke({"explain", "0,1|0,1|2,0"}).code == kExitFalse);
  CHECK(invoke({"explain", "2,0|2,0|2,0"}).code == kExitUsage);
}

TEST_CASE("properties") {
  const Result r = invoke({"properties", "--cases", "50", "--seed", "7"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 4);
}

TEST_CASE("help and missing subcommand") {
  CHECK(invoke({"--help"}).code == kExitOk);
  CHECK(invoke({}).code == kExitUsage);
}

}  // namespace
}  // namespace atlas::cli
