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

#ifndef HYSTCON_ERRORS_HPP_
#define HYSTCON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hystcon {

// Caller supplied malformed or inconsistent input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the shape a reduction supports. The
// message names the failed predicate.
class UnsupportedInstance : public UsageError {
 public:
  UnsupportedInstance(const std::string& predicate, const std::string& detail)
      : UsageError(predicate + ": " + detail), predicate_(predicate) {}

  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

// A guaranteed invariant failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A brute-force oracle refused an instance above its configured size cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYSTCON_CHECK(cond, msg)                                          \
  do {                                                                    \
    if (!(cond)) {                                                        \
      throw ::hystcon::InternalError(std::string("check failed: ") + #cond \
                                     + ": " + (msg));                     \
    }                                                                     \
  } while (false)

}  // namespace hystcon

#endif  // HYSTCON_ERRORS_HPP_
