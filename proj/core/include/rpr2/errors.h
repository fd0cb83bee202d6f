// Copyright 2026 The rpr2 Authors
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

#ifndef RPR2_ERRORS_H_
#define RPR2_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rpr2 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input has the wrong shape (non-square matrix, mismatched dimensions,
// asymmetric grid, out-of-range variable).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A numerical routine failed (singular system, root isolation, failed
// internal cross-check).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpr2

#endif  // RPR2_ERRORS_H_
