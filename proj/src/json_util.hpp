// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "blvl/errors.hpp"
#include "blvl/rat.hpp"

#include "json.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace blvl::json_util {

using nlohmann::json;
using nlohmann::ordered_json;

/// json::parse that rejects duplicate keys (the library keeps the last one).
inline json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> seen;
  std::string duplicate;
  auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: seen.emplace_back(); break;
      case json::parse_event_t::object_end:
        if (!seen.empty()) seen.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto& key = parsed.get_ref<const std::string&>();
        if (!seen.empty() && !seen.back().insert(key).second && duplicate.empty()) duplicate = key;
        break;
      }
      default: break;
    }
    return true;
  };
  json out;
  try {
    out = json::parse(text.begin(), text.end(), callback);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!duplicate.empty()) throw ParseError("duplicate field \"" + duplicate + "\"");
  return out;
}

inline const json& field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

inline void require_object(const json& obj, std::string_view where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + " must be an object");
}

inline void only_keys(const json& obj, std::initializer_list<const char*> keys, std::string_view where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ParseError(std::string(where) + ": unknown field \"" + it.key() + "\"");
  }
}

inline Rat rational(const json& value, std::string_view where) {
  if (!value.is_string()) throw ParseError(std::string(where) + ": rationals must be strings");
  try {
    return parse_rat(value.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

inline VecQ vector(const json& value, std::string_view where) {
  if (!value.is_array()) throw ParseError(std::string(where) + " must be an array");
  VecQ out(static_cast<Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) out(static_cast<Index>(i)) = rational(value[i], where);
  return out;
}

/// Array of equally long rows. An empty array yields a 0 x empty_cols matrix.
inline MatQ matrix(const json& value, Index empty_cols, std::string_view where) {
  if (!value.is_array()) throw ParseError(std::string(where) + " must be an array of rows");
  if (value.empty()) return MatQ(0, empty_cols);
  const std::size_t cols = value[0].is_array() ? value[0].size() : 0;
  MatQ out(static_cast<Index>(value.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_array()) throw ParseError(std::string(where) + ": row " + std::to_string(i) + " is not an array");
    if (value[i].size() != cols) throw ParseError(std::string(where) + ": dimension mismatch, ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = rational(value[i][j], where);
  }
  return out;
}

inline ordered_json to_json(const VecQ& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

inline Index count(const json& value, const char* key, std::string_view where) {
  const json& v = field(value, key, where);
  if (!v.is_number_unsigned()) throw ParseError(std::string(where) + ": \"" + key + "\" must be a nonnegative integer");
  return static_cast<Index>(v.get<std::uint64_t>());
}

}  // namespace blvl::json_util
