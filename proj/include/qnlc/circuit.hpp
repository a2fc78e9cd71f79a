// Copyright 2026 The qnlc developers
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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnlc/ansatz.hpp"
#include "qnlc/common.hpp"

namespace qnlc::circuit {

/// Named parameter slot: the angle lives in a ParamTable under
/// (word, slot). Slots are dense 0..k-1 per word.
struct ParamRef {
    std::string word;
    int slot = 0;

    auto operator<=>(const ParamRef&) const = default;
};

/// Integer multiple of a referenced angle, used in phase bookkeeping.
struct PhaseTerm {
    ParamRef ref;
    int coeff = 1;
};

/// Shared parameter store for all circuits of a model.
class ParamTable {
  public:
    std::map<std::string, AnsatzKind> ansatz_meta;  // per-word ansatz kind

    bool has(const std::string& word, int slot) const;
    double get(const std::string& word, int slot) const;  // throws MissingParamError
    void set(const std::string& word, int slot, double v);
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    const std::map<std::pair<std::string, int>, double>& values() const { return values_; }
    std::map<std::pair<std::string, int>, double>& values() { return values_; }

    /// UTF-8 JSON object {"word.slot": number}; keys sorted, stable bytes.
    std::string to_json() const;
    static ParamTable from_json(const std::string& text);

  private:
    std::map<std::pair<std::string, int>, double> values_;
};

/// Rotation angle: literal radians, or sign * (referenced slot).
struct GateAngle {
    double lit = 0.0;
    std::optional<ParamRef> ref;
    int sign = 1;

    bool symbolic() const { return ref.has_value(); }
    double resolve(const ParamTable& p) const;
};

enum class GateKind { CNOT, RZ, RX, H, X };

struct Gate {
    GateKind kind = GateKind::RZ;
    int q0 = 0;
    int q1 = -1;  // CNOT target
    GateAngle angle;    // RZ/RX only
    std::string owner;  // word whose preparation block this gate belongs to; empty = wiring

    static Gate cnot(int c, int t, std::string owner = "");
    static Gate h(int q, std::string owner = "");
    static Gate x(int q, std::string owner = "");
    static Gate rz(int q, GateAngle a, std::string owner = "");
    static Gate rx(int q, GateAngle a, std::string owner = "");
};

enum class Basis { Z, X };

struct Post {
    int qubit = 0;
    Basis basis = Basis::Z;
    int outcome = 0;
};

/// Global factor relating circuit amplitudes to the diagram semantics:
/// value = lit * exp(i/2 * sum coeff * theta). Magnitude is independent
/// of the parameters.
struct ScalarExpr {
    cx lit{1.0, 0.0};
    std::vector<PhaseTerm> halves;

    bool literal() const { return halves.empty(); }
    cx resolve(const ParamTable& p) const;
    void mul_lit(cx v) { lit *= v; }
    void mul_half(double angle) { lit *= std::exp(cx{0.0, angle / 2.0}); }
    void mul_half(const ParamRef& r, int coeff);
};

/// Parameterized circuit. All qubits start in |0>; gates run in order;
/// postselections project afterwards (no gate ever touches a qubit past
/// its postselection); outputs are the surviving qubits in wire order.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::vector<Post> posts;
    std::vector<int> outputs;
    ScalarExpr scalar;

    bool bound() const;
    void validate() const;
};

struct Stats {
    int qubits = 0;
    int cnot_count = 0;  // grammar wiring only (owner-less gates)
    int cnot_depth = 0;
};

/// Qubit/CNOT statistics over the grammar wiring; word-preparation
/// blocks (owned gates) are not counted.
Stats stats(const Circuit& c);

/// Word-preparation gate block over local qubit indices [0, n_qubits).
/// Layer l of a word acts on qubit slice l of each of its wires; slot
/// indices are layer*stride + local.
struct WordBlock {
    int n_qubits = 0;      // main wire qubits (arity * layers)
    int n_aux = 0;         // postselected helper qubits (after the main ones)
    std::vector<Gate> gates;
    std::vector<Post> posts;  // on aux qubits
};

/// Gate template for one word. layers is the per-wire qubit count.
WordBlock instantiate_word(const std::string& name, WordClass cls, AnsatzKind ansatz, int layers);

/// Replace every symbolic angle by its literal value and fold the
/// scalar; idempotent. Throws MissingParamError.
Circuit bind(const Circuit& c, const ParamTable& p);

/// Drop RZ/RX gates with literal angle exactly 0.
Circuit elide_zero_rotations(const Circuit& c);

bool gate_identical(const Circuit& a, const Circuit& b);

/// One gate per line, `QUBITS n` header, `POST q B o` records, BLOCK /
/// ENDBLOCK markers around word-preparation runs. Bit-exact round-trip.
std::string to_text(const Circuit& c);
Circuit from_text(const std::string& text);

std::string to_string(GateKind k);

}  // namespace qnlc::circuit
