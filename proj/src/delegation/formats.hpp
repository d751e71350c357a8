// Copyright 2026 The qhe-iqp Authors
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

#pragma once

#include <string>

#include "json.hpp"
#include "scheme/scheme.hpp"
#include "sim/circuit.hpp"

namespace qhe {

/// Version tag written into and required from every file.
inline constexpr int kFormatVersion = 1;

// All serializers emit the canonical form: keys sorted, two-space indent,
// trailing newline. Parsing then re-serializing canonical text is
// byte-identical.

std::string serialize_key(const SecretKey &key);
SecretKey parse_key(const std::string &text);

std::string serialize_state(const DensityMatrix &rho);
/// Validates the density-matrix invariants on load.
DensityMatrix parse_state(const std::string &text);

std::string serialize_circuit(const IqpCircuit &circuit);
/// Candidate circuit as written; not yet checked for admissibility.
CircuitSpec parse_circuit_spec(const std::string &text);
/// parse_circuit_spec followed by validate_iqp.
IqpCircuit parse_circuit(const std::string &text);

/// Ciphertext file; the quantum share is carried as a dense matrix and the
/// file is marked "simulation_only": true.
std::string serialize_ciphertext(const Ciphertext &ct);
Ciphertext parse_ciphertext(const std::string &text);

/// Server-side failure message, {"format": "qhe-error", ...}.
std::string serialize_error(const std::string &code, const std::string &message);
/// Returns true and fills `message` when `text` is an error document.
bool parse_error(const std::string &text, std::string &code, std::string &message);

/// Parses JSON, mapping syntax errors to ErrorCode::kParse.
nlohmann::json parse_json(const std::string &text);
std::string canonical_dump(const nlohmann::json &j);

}  // namespace qhe
