// Copyright 2026 The dppsum Authors.
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

#ifndef DPP_ERROR_HPP_
#define DPP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dpp {

// Broad failure classes. The command-line tool maps each one to its own
// exit status.
enum class ErrorKind {
  kInvalidArgument,  // caller violated a documented precondition
  kDomain,           // matrix not symmetric / not PSD / inverse does not exist
  kNumerical,        // overflow, non-finite objective, degenerate direction
  kIo,               // file missing or unreadable
  kFormat,           // file readable but malformed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Require(bool condition, const std::string& what) {
  if (!condition) Fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace dpp

#endif  // DPP_ERROR_HPP_
