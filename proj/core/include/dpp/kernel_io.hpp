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

// Plain-text matrix and vector files.
//
// Matrix: first line n, then n lines of n whitespace-separated decimals.
// Vector (costs, qualities): one decimal per line; blank lines ignored.

#ifndef DPP_KERNEL_IO_HPP_
#define DPP_KERNEL_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dpp/kernel.hpp"

namespace dpp {

SymmetricKernel ReadKernel(std::istream& in);
SymmetricKernel ReadKernel(const std::filesystem::path& path);

// Writes with 17 significant digits so that reading back is exact.
void WriteKernel(std::ostream& out, const SymmetricKernel& kernel);
void WriteKernel(const std::filesystem::path& path,
                 const SymmetricKernel& kernel);

std::vector<double> ReadVector(std::istream& in);
std::vector<double> ReadVector(const std::filesystem::path& path);

}  // namespace dpp

#endif  // DPP_KERNEL_IO_HPP_
