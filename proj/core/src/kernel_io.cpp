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

#include "dpp/kernel_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "dpp/error.hpp"

namespace dpp {
namespace {

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) Fail(ErrorKind::kIo, "cannot write " + path.string());
  return out;
}

}  // namespace

SymmetricKernel ReadKernel(std::istream& in) {
  long long n = -1;
  if (!(in >> n) || n < 0) {
    Fail(ErrorKind::kFormat, "kernel file: first token must be the size n");
  }
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!(in >> m(i, j))) {
        Fail(ErrorKind::kFormat, "kernel file: missing or malformed entry (" +
                                     std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
      }
    }
  }
  std::string trailing;
  if (in >> trailing) {
    Fail(ErrorKind::kFormat,
         "kernel file: unexpected trailing token '" + trailing + "'");
  }
  return SymmetricKernel(std::move(m));
}

SymmetricKernel ReadKernel(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ReadKernel(in);
}

void WriteKernel(std::ostream& out, const SymmetricKernel& kernel) {
  const auto old_precision =
      out.precision(std::numeric_limits<double>::max_digits10);
  const Matrix& m = kernel.entries();
  out << m.rows() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

void WriteKernel(const std::filesystem::path& path,
                 const SymmetricKernel& kernel) {
  auto out = OpenForWrite(path);
  WriteKernel(out, kernel);
}

std::vector<double> ReadVector(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    double v;
    if (!(fields >> v)) {
      std::string probe;
      std::istringstream blank(line);
      if (!(blank >> probe)) continue;
      Fail(ErrorKind::kFormat,
           "vector file: line " + std::to_string(line_no) + " is not a number");
    }
    std::string extra;
    if (fields >> extra) {
      Fail(ErrorKind::kFormat, "vector file: line " + std::to_string(line_no) +
                                   " has more than one value");
    }
    values.push_back(v);
  }
  return values;
}

std::vector<double> ReadVector(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ReadVector(in);
}

}  // namespace dpp
