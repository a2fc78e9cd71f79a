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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnlc/ansatz.hpp"
#include "qnlc/pregroup.hpp"
#include "qnlc/tensor.hpp"

namespace qnlc::diagram {

using qnlc::AnsatzFamily;
using qnlc::WordClass;

enum class WireKind { Noun, Sentence };

struct WireType {
    WireKind kind = WireKind::Noun;
    int qubits = 1;

    std::size_t dim() const { return std::size_t{1} << qubits; }
    bool operator==(const WireType&) const = default;
};

enum class SpiderColor { Z, X };

struct Generator {
    enum class Kind { Word, Cap, Cup, Spider, NegateAll, Box };
    Kind kind = Kind::Word;
    std::string name;  // Word and Box carry a binding key
    WordClass word_class = WordClass::Opaque;
    AnsatzFamily ansatz = AnsatzFamily::None;
    SpiderColor color = SpiderColor::Z;  // Spider only
    double phase = 0.0;                  // Spider only
};

struct Node {
    Generator gen;
    std::vector<int> ins;   // wire ids
    std::vector<int> outs;  // wire ids
};

/// String-diagram IR. Every wire has exactly two endpoints, counting
/// node ports and boundary slots. Read top to bottom: states at the top,
/// diagram outputs at the bottom.
struct Diagram {
    std::vector<WireType> wires;
    std::vector<Node> nodes;
    std::vector<int> inputs;
    std::vector<int> outputs;

    int add_wire(WireType t);
    int add_node(Generator gen, std::vector<int> ins, std::vector<int> outs);

    /// Check the two-endpoint invariant and port/wire type agreement.
    void validate() const;
};

/// Word token with everything the pipeline knows about it.
struct Word {
    std::string name;
    pregroup::PregroupType type;
    WordClass cls = WordClass::Opaque;
    AnsatzFamily ansatz = AnsatzFamily::None;
};

using Bindings = std::map<std::string, tensor::Tensor>;

/// Build the sentence diagram for a reduction: one word state per word,
/// one cup per reduction cup, open positions as outputs in order.
/// Wire sizes come from the base symbol: "s" gives a sentence wire of
/// s_qubits, everything else a noun wire of noun_qubits.
Diagram from_reduction(const std::vector<Word>& words, const pregroup::Reduction& red,
                       int noun_qubits, int s_qubits);

/// Replace word states of known classes by their internal wirings:
/// verbs become small core states copied onto the sentence bundle,
/// adjectives a one-wire core plus copy, relative pronouns the
/// GHZ-plus-spider pattern, "does" plain wires and "not" wires plus a
/// negation on the sentence bundle. Sentence wires of wired verbs are
/// replaced by bundles of noun wires (one per verb argument).
///
/// basis_namer: when set, every copy spider introduced here is
/// conjugated into a variable basis; legs flowing into a spider get a
/// Box named `<prefix>.dag` and legs flowing out a Box named `<prefix>`,
/// where the prefix is chosen by the callback per word (no result means
/// no wrapping for that word). Box tensors come from the bindings.
using BasisNamer = std::function<std::optional<std::string>(const std::string&)>;
Diagram apply_internal_wirings(const Diagram& d, const BasisNamer& basis_namer = nullptr);

/// Exact contraction. The result tensor is indexed by input wires then
/// output wires, in boundary order; scalar (rank 0) when the diagram is
/// closed. `order_seed`, when nonzero, permutes the contraction order
/// (the result must not change).
tensor::Tensor evaluate(const Diagram& d, const Bindings& bindings, unsigned order_seed = 0);

/// |<eval(d1)|eval(d2)>|^2 over flattened outputs.
double compare(const Diagram& d1, const Diagram& d2, const Bindings& bindings);

/// compare normalized by the state norms (cosine-style, in [0,1]).
double compare_normalized(const Diagram& d1, const Diagram& d2, const Bindings& bindings);

/// Sequential composition along shared noun wires: `shared` maps output
/// indices of d1 to noun word names of d2; those word states of d2 are
/// stripped and their wires fed from d1. Fresh nouns of d2 keep their
/// states. Output order: unshared d1 outputs, then d2 outputs.
Diagram compose_sentences(const Diagram& d1, const Diagram& d2,
                          const std::vector<std::pair<int, std::string>>& shared);

/// Merge two connected same-color phase-0 spiders (semantic fusion).
Diagram merge_spiders(const Diagram& d, int node_a, int node_b);

/// Deterministic one-generator-per-line dump and a DOT rendering.
std::string to_text(const Diagram& d);
std::string to_dot(const Diagram& d);

}  // namespace qnlc::diagram
