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

#include "qnlc/pregroup.hpp"

#include <algorithm>
#include <cctype>

namespace qnlc::pregroup {

std::pair<int, int> Reduction::locate(int pos) const {
    int w = 0;
    for (const auto& t : word_types) {
        if (pos < static_cast<int>(t.size())) return {w, pos};
        pos -= static_cast<int>(t.size());
        ++w;
    }
    throw Error("position out of range");
}

PregroupType left_adjoint(const PregroupType& t) {
    PregroupType out;
    out.simples.reserve(t.size());
    for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it)
        out.simples.push_back({it->base, it->winding - 1});
    return out;
}

PregroupType right_adjoint(const PregroupType& t) {
    PregroupType out;
    out.simples.reserve(t.size());
    for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it)
        out.simples.push_back({it->base, it->winding + 1});
    return out;
}

Reduction reduce(const std::vector<PregroupType>& types, const PregroupType& target) {
    if (types.empty()) throw Error("reduce: at least one word required");
    for (const auto& s : target.simples)
        if (s.winding != 0) throw Error("reduce: target must be a plain type");

    std::vector<SimpleType> flat;
    for (const auto& t : types)
        for (const auto& s : t.simples) flat.push_back(s);

    std::vector<int> stack;  // positions of not-yet-cancelled simples
    std::vector<std::pair<int, int>> cups;
    for (int pos = 0; pos < static_cast<int>(flat.size()); ++pos) {
        if (!stack.empty()) {
            const SimpleType& top = flat[static_cast<std::size_t>(stack.back())];
            const SimpleType& cur = flat[static_cast<std::size_t>(pos)];
            if (top.base == cur.base && cur.winding == top.winding + 1) {
                cups.emplace_back(stack.back(), pos);
                stack.pop_back();
                continue;
            }
        }
        stack.push_back(pos);
    }

    PregroupType residue;
    for (int pos : stack) residue.simples.push_back(flat[static_cast<std::size_t>(pos)]);
    if (residue != target) {
        throw NoReductionError(
            "no reduction to '" + to_string(target) + "': residue '" + to_string(residue) + "'",
            to_string(residue));
    }

    std::sort(cups.begin(), cups.end());
    Reduction red;
    red.word_types = types;
    red.cups = std::move(cups);
    red.open = std::move(stack);
    return red;
}

PregroupType parse_type(const std::string& text) {
    PregroupType out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < n) {
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '.') ++i;
        if (i == start) throw SyntaxError("expected type symbol", i);
        SimpleType s{{text.substr(start, i - start)}, 0};
        while (i < n && text[i] == '.') {
            ++i;
            if (i >= n) throw SyntaxError("dangling '.'", i);
            if (text[i] == 'l')
                --s.winding;
            else if (text[i] == 'r')
                ++s.winding;
            else
                throw SyntaxError("expected 'l' or 'r' after '.'", i);
            ++i;
            if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '.')
                throw SyntaxError("unexpected character after adjoint suffix", i);
        }
        out.simples.push_back(std::move(s));
        skip_ws();
    }
    return out;
}

std::string to_string(const SimpleType& t) {
    std::string s = t.base.name;
    for (int k = t.winding; k < 0; ++k) s += ".l";
    for (int k = 0; k < t.winding; ++k) s += ".r";
    return s;
}

std::string to_string(const PregroupType& t) {
    if (t.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < t.simples.size(); ++k) {
        if (k) s += ' ';
        s += to_string(t.simples[k]);
    }
    return s;
}

}  // namespace qnlc::pregroup
