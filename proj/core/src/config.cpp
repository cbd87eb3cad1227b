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


#include "lmg/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include <boost/algorithm/string/trim.hpp>
#include <boost/program_options.hpp>

#include "lmg/errors.hpp"

namespace po = boost::program_options;

namespace lmg {
namespace {

double parse_double(const std::string& key, std::string text) {
  boost::algorithm::trim(text);
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ConfigError("key '" + key + "': cannot parse '" + text + "' as a number");
  }
  return value;
}

void store_source(const po::options_description& desc, std::istream& in, const std::string& source,
                  po::variables_map& vm) {
  try {
    po::store(po::parse_config_file(in, desc, false), vm);
  } catch (const po::error& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

}  // namespace

const std::string& Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("configuration has no key '" + key + "'");
  return it->second;
}

double Config::get_double(const std::string& key) const { return parse_double(key, get(key)); }

long Config::get_int(const std::string& key) const {
  const double v = get_double(key);
  if (v != static_cast<double>(static_cast<long>(v))) throw ConfigError("key '" + key + "' must be an integer");
  return static_cast<long>(v);
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  return parse_double_list(key, get(key));
}

bool Config::is_auto(const std::string& key) const { return boost::algorithm::trim_copy(get(key)) == "auto"; }

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "' needs at least one value");
  return out;
}

Config load_config(const std::vector<ConfigKey>& keys, const std::string& path,
                   const std::vector<std::string>& overrides) {
  po::options_description desc;
  for (const ConfigKey& k : keys) desc.add_options()(k.name.c_str(), po::value<std::string>(), k.help.c_str());

  // program_options keeps the first stored value, so the highest-priority
  // source goes in first.
  po::variables_map vm;
  std::stringstream flags;
  for (const std::string& o : overrides) {
    if (o.find('=') == std::string::npos) throw ConfigError("override '" + o + "' is not of the form key=value");
    flags << o << '\n';
  }
  store_source(desc, flags, "--set", vm);

  if (!path.empty()) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open config file '" + path + "'");
    store_source(desc, file, path, vm);
  }

  std::map<std::string, std::string> values;
  for (const ConfigKey& k : keys) {
    values[k.name] = vm.count(k.name) ? boost::algorithm::trim_copy(vm[k.name].as<std::string>()) : k.default_value;
  }
  return Config(std::move(values));
}

}  // namespace lmg
