// Copyright 2026 The pathip Authors
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

// Internal helpers shared by the document readers and writers.

#ifndef PATHIP_SRC_JSON_UTIL_HPP_
#define PATHIP_SRC_JSON_UTIL_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pathip/error.hpp"

namespace pathip {

// Wraps a parsed JSON object and turns every access failure into a
// ParseError that names the field and its line in the source text.
class JsonReader {
 public:
  explicit JsonReader(std::string_view text) : text_(text) {
    try {
      root_ = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(strip_prefix(e.what()), line_at(e.byte), "");
    }
    if (!root_.is_object()) throw ParseError("document must be a JSON object", 1, "");
  }

  explicit JsonReader(nlohmann::json object, std::string_view text = {})
      : text_(text), root_(std::move(object)) {
    if (!root_.is_object()) throw ParseError("expected a JSON object", 0, "");
  }

  bool has(const std::string& key) const { return root_.contains(key); }
  const nlohmann::json& raw() const { return root_; }
  const nlohmann::json& at(const std::string& key) const {
    if (!has(key)) fail(key, "missing required field");
    return root_.at(key);
  }

  template <typename T>
  T get(const std::string& key) const {
    const auto& node = at(key);
    try {
      return node.get<T>();
    } catch (const nlohmann::json::exception&) {
      fail(key, "value has the wrong type");
    }
  }

  template <typename T>
  T get_or(const std::string& key, T fallback) const {
    return has(key) ? get<T>(key) : fallback;
  }

  void reject_unknown(const std::set<std::string>& known) const {
    for (const auto& item : root_.items()) {
      if (!known.count(item.key())) fail(item.key(), "unknown field");
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    throw ParseError(message, line_of(key), key);
  }

 private:
  static std::string strip_prefix(std::string what) {
    auto pos = what.find("]: ");
    return pos == std::string::npos ? what : what.substr(pos + 3);
  }

  int line_at(size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + byte, '\n'));
  }

  int line_of(const std::string& key) const {
    if (text_.empty()) return 0;
    auto pos = text_.find("\"" + key + "\"");
    return pos == std::string_view::npos ? 0 : line_at(pos);
  }

  std::string_view text_;
  nlohmann::json root_;
};

// Emits one top-level key per line with compact values, in insertion order.
class JsonWriter {
 public:
  template <typename T>
  void field(const std::string& key, const T& value) {
    body_ += body_.empty() ? "{\n" : ",\n";
    body_ += nlohmann::json(key).dump() + ": " + nlohmann::json(value).dump();
  }

  std::string str() const { return (body_.empty() ? "{" : body_) + "\n}\n"; }

 private:
  std::string body_;
};

}  // namespace pathip

#endif  // PATHIP_SRC_JSON_UTIL_HPP_
