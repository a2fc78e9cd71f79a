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

#include <cstddef>
#include <vector>

#include "qnlc/common.hpp"

namespace qnlc::tensor {

/// Dense complex tensor, row-major over `dims`.
struct Tensor {
    std::vector<std::size_t> dims;
    std::vector<cx> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> d);

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return dims.size(); }

    static Tensor scalar(cx v);

    /// 2^q x 2^q identity as a rank-2 tensor.
    static Tensor identity(std::size_t dim);

    cx& at(const std::vector<std::size_t>& idx);
    cx at(const std::vector<std::size_t>& idx) const;
};

/// Tensor whose axes carry integer labels (wire ids). Axes with equal
/// labels across two tensors are contracted; a label appearing once in
/// the whole network is a free index of the result.
struct Labeled {
    Tensor t;
    std::vector<int> labels;
};

/// Contract a and b over all shared labels (outer product when none).
Labeled contract(const Labeled& a, const Labeled& b);

/// Contract a whole network in the given order of tensor picks; the
/// result is label-sorted per `output_order`. Any contraction order
/// gives the same result.
Labeled contract_network(std::vector<Labeled> parts, const std::vector<int>& output_order);

/// Reorder the axes of `a` to match `labels` exactly (a permutation of
/// a.labels; repeated labels are not supported).
Labeled transpose_to(const Labeled& a, const std::vector<int>& labels);

double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace qnlc::tensor
