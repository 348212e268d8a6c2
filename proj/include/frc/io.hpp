/**************************************************************************
 * io.hpp
 *
 * Copyright 2026 The frcage Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <string>

#include "json.hpp"

#include "frc/design.hpp"
#include "frc/mols.hpp"
#include "frc/verify.hpp"

namespace frc::io {

using nlohmann::json;

// Design documents:
//   { "header": { "q", "n", "k", "l", "num_nodes", "num_chunks",
//                 "field": { "p", "m", "modulus", "primitive" }, "version" },
//     "nodes": [ [chunk-or-null, ...], ... ] }
// q, n, field and version are null for designs not built by this library.
json to_json(const StorageDesign& sd);
StorageDesign storage_from_json(const json& doc); // throws Error(ParseError)

std::string to_csv(const StorageDesign& sd);
std::string to_dot(const BipartiteDesign& d);

json to_json(const MolsSet& set);
std::string to_text(const MolsSet& set);

json to_json(const VerificationReport& r);
json to_json(const RepairPlan& plan);
json to_json(const BoundPair& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace frc::io
