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

#include "qnlc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnlc::tensor {

Tensor::Tensor(std::vector<std::size_t> d) : dims(std::move(d)) {
    std::size_t n = 1;
    for (std::size_t x : dims) n *= x;
    data.assign(n, cx{0.0, 0.0});
}

Tensor Tensor::scalar(cx v) {
    Tensor t;
    t.data.assign(1, v);
    return t;
}

Tensor Tensor::identity(std::size_t dim) {
    Tensor t({dim, dim});
    for (std::size_t i = 0; i < dim; ++i) t.data[i * dim + i] = 1.0;
    return t;
}

static std::size_t flat_index(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& idx) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
    return f;
}

cx& Tensor::at(const std::vector<std::size_t>& idx) { return data[flat_index(dims, idx)]; }
cx Tensor::at(const std::vector<std::size_t>& idx) const { return data[flat_index(dims, idx)]; }

Labeled contract(const Labeled& a, const Labeled& b) {
    // Shared labels are contracted pairwise (each label occurs at most
    // once per tensor by construction of the diagram networks).
    std::vector<std::size_t> a_shared, b_shared, a_free, b_free;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
        if (it != b.labels.end()) {
            a_shared.push_back(i);
            b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
        } else {
            a_free.push_back(i);
        }
    }
    for (std::size_t j = 0; j < b.labels.size(); ++j)
        if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end())
            b_free.push_back(j);

    for (std::size_t k = 0; k < a_shared.size(); ++k)
        if (a.t.dims[a_shared[k]] != b.t.dims[b_shared[k]])
            throw ShapeMismatchError("contract: dimension mismatch on shared label");

    Labeled out;
    for (std::size_t i : a_free) {
        out.labels.push_back(a.labels[i]);
        out.t.dims.push_back(a.t.dims[i]);
    }
    for (std::size_t j : b_free) {
        out.labels.push_back(b.labels[j]);
        out.t.dims.push_back(b.t.dims[j]);
    }
    std::size_t out_size = 1;
    for (std::size_t d : out.t.dims) out_size *= d;
    out.t.data.assign(out_size, cx{0.0, 0.0});

    std::size_t shared_size = 1;
    for (std::size_t k : a_shared) shared_size *= a.t.dims[k];

    // strides
    auto strides = [](const std::vector<std::size_t>& dims) {
        std::vector<std::size_t> s(dims.size(), 1);
        for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
        return s;
    };
    auto sa = strides(a.t.dims);
    auto sb = strides(b.t.dims);

    std::size_t a_free_size = 1;
    for (std::size_t i : a_free) a_free_size *= a.t.dims[i];
    std::size_t b_free_size = 1;
    for (std::size_t j : b_free) b_free_size *= b.t.dims[j];

    auto unflatten_offset = [](std::size_t flat, const std::vector<std::size_t>& axes,
                               const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& strd) {
        std::size_t off = 0;
        for (std::size_t k = axes.size(); k-- > 0;) {
            std::size_t d = dims[axes[k]];
            off += (flat % d) * strd[axes[k]];
            flat /= d;
        }
        return off;
    };

    for (std::size_t ia = 0; ia < a_free_size; ++ia) {
        std::size_t a_off = unflatten_offset(ia, a_free, a.t.dims, sa);
        for (std::size_t jb = 0; jb < b_free_size; ++jb) {
            std::size_t b_off = unflatten_offset(jb, b_free, b.t.dims, sb);
            cx acc{0.0, 0.0};
            for (std::size_t s = 0; s < shared_size; ++s) {
                std::size_t ao = a_off + unflatten_offset(s, a_shared, a.t.dims, sa);
                std::size_t bo = b_off + unflatten_offset(s, b_shared, b.t.dims, sb);
                acc += a.t.data[ao] * b.t.data[bo];
            }
            out.t.data[ia * b_free_size + jb] = acc;
        }
    }
    return out;
}

Labeled transpose_to(const Labeled& a, const std::vector<int>& labels) {
    if (labels.size() != a.labels.size())
        throw ShapeMismatchError("transpose_to: label count mismatch");
    std::vector<std::size_t> perm(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto it = std::find(a.labels.begin(), a.labels.end(), labels[k]);
        if (it == a.labels.end()) throw ShapeMismatchError("transpose_to: missing label");
        perm[k] = static_cast<std::size_t>(it - a.labels.begin());
    }
    Labeled out;
    out.labels = labels;
    out.t.dims.resize(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) out.t.dims[k] = a.t.dims[perm[k]];
    std::size_t n = a.t.data.size();
    out.t.data.assign(n, cx{0.0, 0.0});

    std::vector<std::size_t> idx(a.t.dims.size(), 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t rem = flat;
        for (std::size_t k = a.t.dims.size(); k-- > 0;) {
            idx[k] = rem % a.t.dims[k];
            rem /= a.t.dims[k];
        }
        std::size_t of = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) of = of * a.t.dims[perm[k]] + idx[perm[k]];
        out.t.data[of] = a.t.data[flat];
    }
    return out;
}

Labeled contract_network(std::vector<Labeled> parts, const std::vector<int>& output_order) {
    if (parts.empty()) {
        Labeled r;
        r.t = Tensor::scalar(1.0);
        return r;
    }
    // Greedy: fold parts sharing labels first so intermediate free index
    // sets stay small; fall back to outer products at the end.
    while (parts.size() > 1) {
        std::size_t pick_a = 0, pick_b = 1;
        bool found = false;
        for (std::size_t i = 0; i < parts.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < parts.size() && !found; ++j) {
                for (int l : parts[i].labels) {
                    if (std::find(parts[j].labels.begin(), parts[j].labels.end(), l) !=
                        parts[j].labels.end()) {
                        pick_a = i;
                        pick_b = j;
                        found = true;
                        break;
                    }
                }
            }
        }
        Labeled merged = contract(parts[pick_a], parts[pick_b]);
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(pick_b));
        parts[pick_a] = std::move(merged);
    }
    return transpose_to(parts[0], output_order);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (a.dims != b.dims || a.data.size() != b.data.size())
        throw ShapeMismatchError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

}  // namespace qnlc::tensor
