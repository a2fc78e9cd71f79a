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

#include "qnlc/common.hpp"

namespace qnlc {

enum class WordClass { Noun, Adjective, TVerb, DTVerb, RelPron, Does, Not, Opaque };

/// Gate families for word states.
///
/// NounEuler: per layer, RX then RZ on |0>, two angles (the third Euler
///   angle is a global phase and is dropped).
/// BellVerb: the verb core is a bare cap per layer; no parameters, so
///   all verbs share one circuit.
/// EulerVerb: cap with an arbitrary one-qubit unitary RZ(a)RX(b)RZ(c)
///   on the object leg; three angles per layer (six for a ditransitive,
///   which carries one unitary per object leg).
/// SvdVerb: EulerVerb plus a diagonal factor on the subject leg whose
///   entries are cos((s+d)/2) and cos((s-d)/2) for two extra angles
///   s, d; realized in circuits by a postselected ancilla.
enum class AnsatzFamily { None, NounEuler, BellVerb, EulerVerb, SvdVerb };

struct AnsatzKind {
    AnsatzFamily family = AnsatzFamily::None;
    bool basis_wrapped = false;  // add 2 trainable basis angles per copy site

    bool operator==(const AnsatzKind&) const = default;
};

enum class BasisScope { Global, Word };

/// Parameter slots per layer for a word of this class under this family.
inline int param_stride(WordClass cls, AnsatzFamily fam) {
    switch (cls) {
        case WordClass::Noun:
        case WordClass::Adjective:
            return fam == AnsatzFamily::None ? 0 : 2;
        case WordClass::TVerb:
            switch (fam) {
                case AnsatzFamily::BellVerb: return 0;
                case AnsatzFamily::EulerVerb: return 3;
                case AnsatzFamily::SvdVerb: return 5;
                default: return 0;
            }
        case WordClass::DTVerb:
            switch (fam) {
                case AnsatzFamily::BellVerb: return 0;
                case AnsatzFamily::EulerVerb: return 6;
                case AnsatzFamily::SvdVerb: return 8;
                default: return 0;
            }
        default:
            return 0;
    }
}

inline std::string to_string(WordClass c) {
    switch (c) {
        case WordClass::Noun: return "noun";
        case WordClass::Adjective: return "adj";
        case WordClass::TVerb: return "tverb";
        case WordClass::DTVerb: return "dtverb";
        case WordClass::RelPron: return "relpron";
        case WordClass::Does: return "does";
        case WordClass::Not: return "not";
        case WordClass::Opaque: return "opaque";
    }
    return "?";
}

inline WordClass word_class_from(const std::string& s) {
    if (s == "noun") return WordClass::Noun;
    if (s == "adj") return WordClass::Adjective;
    if (s == "tverb") return WordClass::TVerb;
    if (s == "dtverb") return WordClass::DTVerb;
    if (s == "relpron") return WordClass::RelPron;
    if (s == "does") return WordClass::Does;
    if (s == "not") return WordClass::Not;
    if (s == "opaque") return WordClass::Opaque;
    throw Error("unknown word class '" + s + "'");
}

inline std::string to_string(AnsatzFamily f) {
    switch (f) {
        case AnsatzFamily::None: return "none";
        case AnsatzFamily::NounEuler: return "noun";
        case AnsatzFamily::BellVerb: return "bell";
        case AnsatzFamily::EulerVerb: return "euler";
        case AnsatzFamily::SvdVerb: return "svd";
    }
    return "?";
}

inline AnsatzFamily ansatz_family_from(const std::string& s) {
    if (s == "none") return AnsatzFamily::None;
    if (s == "noun") return AnsatzFamily::NounEuler;
    if (s == "bell") return AnsatzFamily::BellVerb;
    if (s == "euler") return AnsatzFamily::EulerVerb;
    if (s == "svd") return AnsatzFamily::SvdVerb;
    throw Error("unknown ansatz '" + s + "'");
}

}  // namespace qnlc
