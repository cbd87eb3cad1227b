// Copyright 2026 The lmg Authors
//
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


#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "lmg/config.hpp"
#include "lmg/csv.hpp"
#include "lmg/errors.hpp"

namespace lmg {
namespace {

const std::vector<ConfigKey> kKeys = {
    {"lambda", "0.5", "coupling"},
    {"values", "1,2", "list"},
    {"method", "auto", "choice"},
};

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Config, DefaultsFileAndOverridePrecedence) {
  const Config defaults = load_config(kKeys, "", {});
  EXPECT_EQ(defaults.get("lambda"), "0.5");
  EXPECT_TRUE(defaults.is_auto("method"));

  const std::string path = write_temp("lmg_cfg_a.cfg", "# comment\nlambda = 2\nmethod = rk\n");
  const Config file = load_config(kKeys, path, {});
  EXPECT_DOUBLE_EQ(file.get_double("lambda"), 2.0);
  EXPECT_EQ(file.get("method"), "rk");

  const Config flagged = load_config(kKeys, path, {"lambda=3.5"});
  EXPECT_DOUBLE_EQ(flagged.get_double("lambda"), 3.5);
  EXPECT_EQ(flagged.get("method"), "rk");
}

TEST(Config, UnknownKeysRejected) {
  const std::string path = write_temp("lmg_cfg_b.cfg", "lambda = 2\nlamda = 3\n");
  EXPECT_THROW(load_config(kKeys, path, {}), ConfigError);
  EXPECT_THROW(load_config(kKeys, "", {"bogus=1"}), ConfigError);
  EXPECT_THROW(load_config(kKeys, "", {"lambda"}), ConfigError);
}

TEST(Config, MissingFileIsIoError) {
  EXPECT_THROW(load_config(kKeys, "/nonexistent/dir/x.cfg", {}), IoError);
}

TEST(Config, NumericParsing) {
  const Config c({{"a", " 1e-3 "}, {"b", "inf"}, {"c", "x1"}, {"d", "4"}, {"e", "4.5"}, {"f", "0.5, 2 ,3"}});
  EXPECT_DOUBLE_EQ(c.get_double("a"), 1e-3);
  EXPECT_EQ(c.get_double("b"), std::numeric_limits<double>::infinity());
  EXPECT_THROW(c.get_double("c"), ConfigError);
  EXPECT_EQ(c.get_int("d"), 4);
  EXPECT_THROW(c.get_int("e"), ConfigError);
  EXPECT_EQ(c.get_double_list("f"), (std::vector<double>{0.5, 2.0, 3.0}));
  EXPECT_THROW(c.get("zzz"), ConfigError);
  EXPECT_THROW(parse_double_list("k", ""), ConfigError);
}

TEST(Csv, SeventeenSignificantDigitsRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1.0}) {
    const std::string s = format_double(v);
    EXPECT_EQ(std::stod(s), v) << s;
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(Csv, LocaleIndependentDecimalPoint) {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") == nullptr) GTEST_SKIP() << "de_DE locale not installed";
  EXPECT_EQ(format_double(0.5), "0.5");
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST(Csv, Layout) {
  CsvTable t;
  t.header = {"lmg 0.1.0", "experiment = demo"};
  t.columns = {"a", "b", "c"};
  t.rows = {{1.5, 2L, std::string("x")}, {std::nan(""), 0L, std::string("y")}};
  std::ostringstream out;
  write_csv(t, out);
  EXPECT_EQ(out.str(), "# lmg 0.1.0\n# experiment = demo\na,b,c\n1.5,2,x\nnan,0,y\n");

  t.rows.push_back({1.0});
  std::ostringstream bad;
  EXPECT_THROW(write_csv(t, bad), ContractViolation);
}

TEST(Csv, UnwritablePathIsIoError) {
  CsvTable t;
  t.columns = {"a"};
  EXPECT_THROW(write_csv(t, std::string("/nonexistent/dir/out.csv")), IoError);
}

}  // namespace
}  // namespace lmg
