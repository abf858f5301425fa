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

// JSON model files: trained weights, the similarity constant, the fitted
// feature configuration and the trainer's final status. Doubles are written
// with enough digits to round-trip exactly.

#ifndef DPP_MODEL_IO_HPP_
#define DPP_MODEL_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "dpp/learn.hpp"
#include "dpp/text/features.hpp"

namespace dpp {

struct ModelFile {
  ConditionalModel model;      // theta may be empty before training
  text::FeatureConfig features;
};

void WriteModel(std::ostream& out, const ModelFile& file);
void WriteModel(const std::filesystem::path& path, const ModelFile& file);

// kFormat on malformed JSON or missing fields, kIo when unreadable.
ModelFile ReadModel(std::istream& in);
ModelFile ReadModel(const std::filesystem::path& path);

}  // namespace dpp

#endif  // DPP_MODEL_IO_HPP_
