// Copyright 2026 The mqs Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mqs {

enum class GateKind { SingleQubit, TwoQubit, Measurement };

/// One gate over virtual qubits. Two-qubit gates carry exactly two distinct
/// indices, everything else exactly one.
struct Gate {
  GateKind kind = GateKind::SingleQubit;
  std::string label;
  std::vector<int> qubits;
  std::optional<double> param;

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::string name;

  bool operator==(const Circuit&) const = default;

  /// Appends a gate after checking arity, index range and distinctness.
  void add(std::string_view label, std::vector<int> qubits,
           std::optional<double> param = std::nullopt);
};

/// Gates grouped into timeslices. Within a slice no two gates share a qubit.
struct SlicedCircuit {
  Circuit circuit;
  std::vector<std::vector<Gate>> slices;

  std::size_t num_slices() const { return slices.size(); }
};

enum class CircuitFormat { Native, QasmSubset };

/// Raised for malformed circuit text. `line()` is 1-based, 0 when the error
/// is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Looks up the gate class of a label. Returns nullopt for unknown names.
std::optional<GateKind> gate_kind_of(std::string_view label);

Circuit parse_circuit(std::string_view text, CircuitFormat format);

/// Renders the native line format; parse_circuit(render_native(c)) == c.
std::string render_native(const Circuit& c);

/// ASAP packing: every gate lands one slice after the latest earlier gate
/// touching any of its qubits.
SlicedCircuit slice_circuit(const Circuit& c);

Circuit gen_ghz(int n);
Circuit gen_qft(int n);
Circuit gen_cuccaro(int bits);
Circuit gen_qvol(int n, int depth, std::uint64_t seed);

}  // namespace mqs
