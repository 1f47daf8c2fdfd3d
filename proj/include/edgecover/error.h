// Copyright 2026 The edgecover Authors.
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

#ifndef EDGECOVER_ERROR_H_
#define EDGECOVER_ERROR_H_

#include <stdexcept>
#include <string>

namespace edgecover {

enum class ErrorCode {
  kInput = 1,
  kParse = 2,
  kInfeasible = 3,
  kCapRefusal = 4,
  kNoCandidate = 5,
  kOverflow = 6,
  kInternal = 7,
};

// Base of every exception thrown by the library. The C API maps `code()` onto
// its status enum one to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorCode::kInput, what) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorCode::kInfeasible, what) {}
};

class CapRefusalError : public Error {
 public:
  explicit CapRefusalError(const std::string& what)
      : Error(ErrorCode::kCapRefusal, what) {}
};

class NoCandidateError : public Error {
 public:
  explicit NoCandidateError(const std::string& what)
      : Error(ErrorCode::kNoCandidate, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::kOverflow, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace edgecover

#endif  // EDGECOVER_ERROR_H_
