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

#include <string>
#include <utility>
#include <vector>

#include "qnlc/common.hpp"

namespace qnlc::pregroup {

/// Atomic grammatical symbol, e.g. "n" (noun) or "s" (sentence).
struct BasicType {
    std::string name;

    bool operator==(const BasicType&) const = default;
};

/// A basic type decorated with an adjoint order ("winding").
/// winding 0 is the plain type, -1 its left adjoint, +1 its right adjoint;
/// iterated adjoints give arbitrary integers.
struct SimpleType {
    BasicType base;
    int winding = 0;

    bool operator==(const SimpleType&) const = default;
};

/// A product of simple types. Empty means the unit type 1.
struct PregroupType {
    std::vector<SimpleType> simples;

    bool operator==(const PregroupType&) const = default;
    bool empty() const { return simples.empty(); }
    std::size_t size() const { return simples.size(); }
};

/// Result of reducing a sequence of word types to a target type.
///
/// Positions index the concatenation of all word types left to right.
/// Each cup (i, j) with i < j cancels position i against position j;
/// cups are planar (never crossing). Positions in `open` survive the
/// reduction and spell the target type in order.
struct Reduction {
    std::vector<PregroupType> word_types;
    std::vector<std::pair<int, int>> cups;  // sorted by first component
    std::vector<int> open;                  // ascending

    std::size_t total_positions() const {
        std::size_t n = 0;
        for (const auto& t : word_types) n += t.size();
        return n;
    }

    /// Word index and port index for a flattened position.
    std::pair<int, int> locate(int pos) const;
};

/// Left adjoint: reverse the simples and decrement each winding.
PregroupType left_adjoint(const PregroupType& t);

/// Right adjoint: reverse the simples and increment each winding.
PregroupType right_adjoint(const PregroupType& t);

/// Reduce a sequence of word types to `target` with the lazy stack
/// strategy: scan flattened positions left to right, cancelling against
/// the top of the stack whenever the bases match and the incoming
/// winding is the stack winding plus one. Deterministic; produces the
/// leftmost-innermost cup pattern.
///
/// Throws NoReductionError when the surviving stack does not spell
/// `target` exactly (the message carries the residue).
Reduction reduce(const std::vector<PregroupType>& types, const PregroupType& target);

/// Parse the textual type syntax: simple types separated by spaces,
/// each `base(.l|.r)*` with suffixes applied innermost-first, e.g.
/// "n.r s n.l" or "n.l.l". Throws SyntaxError with a byte offset.
PregroupType parse_type(const std::string& text);

/// Inverse of parse_type; deterministic.
std::string to_string(const SimpleType& t);
std::string to_string(const PregroupType& t);

}  // namespace qnlc::pregroup
