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


#ifndef LMG_CONFIG_HPP
#define LMG_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace lmg {

/// Declared key of an experiment configuration with its default value.
struct ConfigKey {
  std::string name;
  std::string default_value;
  std::string help;
};

/// Resolved flat key/value configuration. Every declared key is present.
class Config {
 public:
  Config() = default;
  explicit Config(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  const std::map<std::string, std::string>& values() const noexcept { return values_; }
  bool contains(const std::string& key) const { return values_.count(key) != 0; }

  /// Raw string; throws ConfigError for an undeclared key.
  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  long get_int(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;
  /// True when the value is the literal "auto".
  bool is_auto(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

/// Reads `key = value` lines (`#` starts a comment) from path, then applies
/// overrides of the form key=value. Overrides win over the file, the file
/// wins over defaults. Unknown keys in either source are a ConfigError; an
/// unreadable file is an IoError.
Config load_config(const std::vector<ConfigKey>& keys, const std::string& path,
                   const std::vector<std::string>& overrides);

/// Parses a comma-separated list of reals; throws ConfigError naming key.
std::vector<double> parse_double_list(const std::string& key, const std::string& text);

}  // namespace lmg

#endif  // LMG_CONFIG_HPP
