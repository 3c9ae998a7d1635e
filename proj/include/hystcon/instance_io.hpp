// Copyright 2026 The hystcon Authors
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

#ifndef HYSTCON_INSTANCE_IO_HPP_
#define HYSTCON_INSTANCE_IO_HPP_

/// \file
/// JSON instance and solution files.
///
///   {"kind":"hystcon","n":3,"source":[],"target":[1,2,3],"forbidden":[[2],[3]]}
///   {"kind":"sort","pi":[2,1,4,3],"forbidden":[[1,2,4,3]],"ops":"exchange"}
///
/// Element lists are 1-based. Every error message starts with "line L:".

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hystcon/errors.hpp"
#include "hystcon/guided_sorting.hpp"
#include "hystcon/permutation.hpp"
#include "hystcon/solver.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

using Json = nlohmann::json;

enum class InstanceKind { hystcon, sort };

inline std::string to_string(InstanceKind k) { return k == InstanceKind::hystcon ? "hystcon" : "sort"; }

struct InstanceFile {
  InstanceKind kind = InstanceKind::hystcon;
  HystconInstance hystcon;
  GuidedSortingInstance sort;
};

struct SolutionFile {
  InstanceKind kind = InstanceKind::hystcon;
  bool yes = false;
  std::vector<VertexSet> sets;
  std::vector<Permutation> perms;
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
};

namespace io_detail {

/// Line (1-based) of every value in a well-formed JSON text, keyed by its
/// JSON pointer.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  std::size_t line_of(const std::string& pointer) const {
    const auto it = lines_.find(pointer);
    return it == lines_.end() ? 1 : it->second;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
      }
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out += c;
      }
    }
    return out;
  }

  void value(const std::string& pointer) {
    lines_.emplace(pointer, line_);
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + escape(key));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t i = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(i++));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          skip_ws();
        }
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos) {
        ++pos_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::size_t> lines_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    try {
      doc_ = Json::parse(text);
    } catch (const Json::parse_error& e) {
      std::size_t line = 1;
      std::size_t col = 1;
      const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw UsageError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                       ": malformed JSON: " + e.what());
    }
    index_.emplace(text);
  }

  const Json& doc() const noexcept { return doc_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& msg) const {
    throw UsageError("line " + std::to_string(index_->line_of(pointer)) + ": " +
                     (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
  }

  const Json& object_at(const std::string& pointer) const {
    const Json& j = doc_.at(Json::json_pointer(pointer));
    if (!j.is_object()) fail(pointer, "expected an object");
    return j;
  }

  void only_keys(const std::string& pointer, const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : object_at(pointer).items()) {
      if (!allowed.contains(k)) fail(pointer + "/" + k, "unknown key \"" + k + "\"");
    }
  }

  const Json* field(const std::string& pointer, const std::string& key, bool required) const {
    const Json& obj = object_at(pointer);
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(pointer, "missing key \"" + key + "\"");
      return nullptr;
    }
    return &*it;
  }

  std::size_t natural(const std::string& pointer, const Json& j) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(pointer, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  std::string text(const std::string& pointer, const Json& j) const {
    if (!j.is_string()) fail(pointer, "expected a string");
    return j.get<std::string>();
  }

  std::vector<int> int_list(const std::string& pointer, const Json& j) const {
    if (!j.is_array()) fail(pointer, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& e = j[i];
      if (!e.is_number_integer()) fail(pointer + "/" + std::to_string(i), "expected an integer");
      const long long v = e.get<long long>();
      if (v < -(1LL << 30) || v > (1LL << 30)) fail(pointer + "/" + std::to_string(i), "integer out of range");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  VertexSet set(const std::string& pointer, const Json& j, std::size_t n) const {
    const auto el = int_list(pointer, j);
    std::set<int> seen;
    for (std::size_t i = 0; i < el.size(); ++i) {
      const std::string p = pointer + "/" + std::to_string(i);
      if (el[i] < 1 || static_cast<std::size_t>(el[i]) > n) {
        fail(p, "element " + std::to_string(el[i]) + " outside [1," + std::to_string(n) + "]");
      }
      if (!seen.insert(el[i]).second) fail(p, "duplicate element " + std::to_string(el[i]));
    }
    return VertexSet::from_elements(n, el);
  }

  Permutation perm(const std::string& pointer, const Json& j) const {
    auto el = int_list(pointer, j);
    try {
      return Permutation(std::move(el));
    } catch (const UsageError& e) {
      fail(pointer, std::string("not a permutation: ") + e.what());
    }
  }

 private:
  std::string_view text_;
  Json doc_;
  std::optional<LineIndex> index_;
};

inline Json set_json(const VertexSet& v) { return Json(v.elements()); }

}  // namespace io_detail

/// Throws UsageError with a "line L:" prefix on any malformed input.
inline InstanceFile parse_instance(std::string_view text) {
  const io_detail::Reader rd(text);
  rd.object_at("");
  const std::string kind = rd.text("/kind", *rd.field("", "kind", true));
  InstanceFile out;
  if (kind == "hystcon") {
    out.kind = InstanceKind::hystcon;
    rd.only_keys("", {"kind", "n", "source", "target", "forbidden"});
    const std::size_t n = rd.natural("/n", *rd.field("", "n", true));
    if (n == 0) rd.fail("/n", "n must be at least 1");
    auto& h = out.hystcon;
    h.n = n;
    h.source = rd.set("/source", *rd.field("", "source", true), n);
    h.target = rd.set("/target", *rd.field("", "target", true), n);
    if (const Json* f = rd.field("", "forbidden", false)) {
      if (!f->is_array()) rd.fail("/forbidden", "expected an array of sets");
      for (std::size_t i = 0; i < f->size(); ++i) {
        h.forbidden.push_back(rd.set("/forbidden/" + std::to_string(i), (*f)[i], n));
      }
    }
  } else if (kind == "sort") {
    out.kind = InstanceKind::sort;
    rd.only_keys("", {"kind", "pi", "forbidden", "ops", "k_bound"});
    auto& s = out.sort;
    s.pi = rd.perm("/pi", *rd.field("", "pi", true));
    if (const Json* f = rd.field("", "forbidden", false)) {
      if (!f->is_array()) rd.fail("/forbidden", "expected an array of permutations");
      for (std::size_t i = 0; i < f->size(); ++i) {
        const std::string p = "/forbidden/" + std::to_string(i);
        Permutation phi = rd.perm(p, (*f)[i]);
        if (phi.size() != s.pi.size()) {
          rd.fail(p, "size " + std::to_string(phi.size()) + " differs from pi size " +
                         std::to_string(s.pi.size()));
        }
        s.forbidden.push_back(std::move(phi));
      }
    }
    if (const Json* o = rd.field("", "ops", false)) {
      const std::string ops = rd.text("/ops", *o);
      if (ops == "exchange") {
        s.ops = OpModel::exchange;
      } else if (ops == "adjacent") {
        s.ops = OpModel::adjacent;
      } else {
        rd.fail("/ops", "expected \"exchange\" or \"adjacent\"");
      }
    }
    if (const Json* k = rd.field("", "k_bound", false)) s.k_bound = rd.natural("/k_bound", *k);
  } else {
    rd.fail("/kind", "expected \"hystcon\" or \"sort\"");
  }
  return out;
}

inline Json instance_to_json(const InstanceFile& f) {
  Json j;
  j["kind"] = to_string(f.kind);
  if (f.kind == InstanceKind::hystcon) {
    j["n"] = f.hystcon.n;
    j["source"] = io_detail::set_json(f.hystcon.source);
    j["target"] = io_detail::set_json(f.hystcon.target);
    j["forbidden"] = Json::array();
    for (const auto& v : f.hystcon.forbidden) j["forbidden"].push_back(io_detail::set_json(v));
  } else {
    j["pi"] = f.sort.pi.images();
    j["forbidden"] = Json::array();
    for (const auto& p : f.sort.forbidden) j["forbidden"].push_back(p.images());
    j["ops"] = to_string(f.sort.ops);
    if (f.sort.k_bound) j["k_bound"] = *f.sort.k_bound;
  }
  return j;
}

inline std::string serialize_instance(const InstanceFile& f) {
  return instance_to_json(f).dump() + "\n";
}

inline Json solution_to_json(const SolutionFile& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["answer"] = s.yes ? "YES" : "NO";
  j["path"] = Json::array();
  if (s.kind == InstanceKind::hystcon) {
    for (const auto& v : s.sets) j["path"].push_back(io_detail::set_json(v));
  } else {
    for (const auto& p : s.perms) j["path"].push_back(p.images());
    j["swaps"] = Json::array();
    for (const auto& [a, b] : s.swaps) j["swaps"].push_back({a, b});
  }
  if (s.yes) {
    j["length"] = s.kind == InstanceKind::hystcon ? (s.sets.empty() ? 0 : s.sets.size() - 1)
                                                  : s.swaps.size();
  } else {
    j["length"] = nullptr;
  }
  return j;
}

/// Reads a solution written by `solve --json`, interpreted against `inst`.
inline SolutionFile parse_solution(std::string_view text, const InstanceFile& inst) {
  const io_detail::Reader rd(text);
  rd.object_at("");
  SolutionFile out;
  if (const Json* k = rd.field("", "kind", false)) {
    const std::string kind = rd.text("/kind", *k);
    if (kind != to_string(inst.kind)) {
      rd.fail("/kind", "solution kind \"" + kind + "\" does not match instance kind \"" +
                           to_string(inst.kind) + "\"");
    }
  }
  out.kind = inst.kind;
  const std::string answer = rd.text("/answer", *rd.field("", "answer", true));
  if (answer != "YES" && answer != "NO") rd.fail("/answer", "expected \"YES\" or \"NO\"");
  out.yes = answer == "YES";
  const Json* path = rd.field("", "path", false);
  if (path && !path->is_null()) {
    if (!path->is_array()) rd.fail("/path", "expected an array");
    for (std::size_t i = 0; i < path->size(); ++i) {
      const std::string p = "/path/" + std::to_string(i);
      if (inst.kind == InstanceKind::hystcon) {
        out.sets.push_back(rd.set(p, (*path)[i], inst.hystcon.n));
      } else {
        Permutation perm = rd.perm(p, (*path)[i]);
        if (perm.size() != inst.sort.pi.size()) rd.fail(p, "permutation size differs from pi");
        out.perms.push_back(std::move(perm));
      }
    }
  }
  if (const Json* sw = rd.field("", "swaps", false)) {
    if (!sw->is_array()) rd.fail("/swaps", "expected an array of pairs");
    for (std::size_t i = 0; i < sw->size(); ++i) {
      const std::string p = "/swaps/" + std::to_string(i);
      const auto pair = rd.int_list(p, (*sw)[i]);
      if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1) rd.fail(p, "expected a pair of positions");
      out.swaps.emplace_back(static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1]));
    }
  }
  return out;
}

}  // namespace hystcon

#endif  // HYSTCON_INSTANCE_IO_HPP_
