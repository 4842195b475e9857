// Copyright 2026 The NeuroAffect Authors.
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

#ifndef NEUROAFFECT_ERROR_HPP
#define NEUROAFFECT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace neuroaffect {

enum class ErrorKind {
  kArgument,
  kValidation,
  kFormat,
  kIo,
  kUndefinedCorrelation,
  kCoverage,
};

// Single exception type for the library. The kind decides how callers
// (C API, CLI) report it; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_argument(const std::string& msg) {
  throw Error(ErrorKind::kArgument, msg);
}
[[noreturn]] inline void throw_validation(const std::string& msg) {
  throw Error(ErrorKind::kValidation, msg);
}
[[noreturn]] inline void throw_format(const std::string& msg) {
  throw Error(ErrorKind::kFormat, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorKind::kIo, msg);
}

}  // namespace neuroaffect

#endif  // NEUROAFFECT_ERROR_HPP
