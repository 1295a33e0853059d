// Copyright 2026 The tightfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIGHTFREE_ERRORS_HPP_
#define TIGHTFREE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tightfree {

// Invalid input to a domain operation (bad edge, violated precondition, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list / family / cache text. The message carries the line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " at line " + std::to_string(line)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A bounded search gave up before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::uint64_t states)
      : Error("budget exhausted after " + std::to_string(states) + " states"),
        states_(states) {}

  std::uint64_t states() const { return states_; }

 private:
  std::uint64_t states_;
};

}  // namespace tightfree

#endif  // TIGHTFREE_ERRORS_HPP_
