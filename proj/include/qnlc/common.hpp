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

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qnlc {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Base class for all qnlc errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct NoReductionError : Error {
    std::string residue;
    NoReductionError(const std::string& what, std::string res)
        : Error(what), residue(std::move(res)) {}
};

struct TypeMismatchError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct UnknownClassError : Error {
    using Error::Error;
};

struct UnsupportedGeneratorError : Error {
    using Error::Error;
};

struct ExtractionError : Error {
    using Error::Error;
};

struct MissingParamError : Error {
    using Error::Error;
};

struct NonShiftableError : Error {
    using Error::Error;
};

struct EmptyCorpusError : Error {
    using Error::Error;
};

struct NoParamsError : Error {
    using Error::Error;
};

struct ClassMismatchError : Error {
    using Error::Error;
};

struct EmptyCandidatesError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Canonicalize an angle into [0, 2*pi).
inline double canonical_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    // fmod can land exactly on 2*pi after the correction
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Shortest decimal form that round-trips a double exactly.
inline std::string fmt_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace qnlc
