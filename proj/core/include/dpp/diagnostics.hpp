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

// Non-fatal warning channel (eigenvalue clamping, exponent clipping, ...).
// The default handler writes "warning: <msg>" to stderr.

#ifndef DPP_DIAGNOSTICS_HPP_
#define DPP_DIAGNOSTICS_HPP_

#include <functional>
#include <string_view>
#include <utility>

namespace dpp {

using WarningHandler = std::function<void(std::string_view)>;

// Installs `handler` and returns the previous one. An empty handler silences
// warnings.
WarningHandler SetWarningHandler(WarningHandler handler);

void Warn(std::string_view message);

// RAII: routes warnings to `handler` for the lifetime of the object.
class ScopedWarningHandler {
 public:
  explicit ScopedWarningHandler(WarningHandler handler)
      : previous_(SetWarningHandler(std::move(handler))) {}
  ~ScopedWarningHandler() { SetWarningHandler(std::move(previous_)); }

  ScopedWarningHandler(const ScopedWarningHandler&) = delete;
  ScopedWarningHandler& operator=(const ScopedWarningHandler&) = delete;

 private:
  WarningHandler previous_;
};

}  // namespace dpp

#endif  // DPP_DIAGNOSTICS_HPP_
