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

#include "qnlc/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace qnlc::diagram {

int Diagram::add_wire(WireType t) {
    wires.push_back(t);
    return static_cast<int>(wires.size()) - 1;
}

int Diagram::add_node(Generator gen, std::vector<int> ins, std::vector<int> outs) {
    nodes.push_back(Node{std::move(gen), std::move(ins), std::move(outs)});
    return static_cast<int>(nodes.size()) - 1;
}

void Diagram::validate() const {
    std::vector<int> ends(wires.size(), 0);
    auto touch = [&](int w) {
        if (w < 0 || w >= static_cast<int>(wires.size())) throw Error("diagram: bad wire id");
        ++ends[static_cast<std::size_t>(w)];
    };
    for (const auto& n : nodes) {
        for (int w : n.ins) touch(w);
        for (int w : n.outs) touch(w);
    }
    for (int w : inputs) touch(w);
    for (int w : outputs) touch(w);
    for (std::size_t w = 0; w < wires.size(); ++w)
        if (ends[w] != 2)
            throw Error("diagram: wire " + std::to_string(w) + " has " + std::to_string(ends[w]) +
                        " endpoints (expected 2)");
}

static WireType wire_type_for(const pregroup::SimpleType& s, int noun_qubits, int s_qubits) {
    if (s.base.name == "s") return WireType{WireKind::Sentence, s_qubits};
    return WireType{WireKind::Noun, noun_qubits};
}

Diagram from_reduction(const std::vector<Word>& words, const pregroup::Reduction& red,
                       int noun_qubits, int s_qubits) {
    if (words.size() != red.word_types.size())
        throw TypeMismatchError("from_reduction: word/type count mismatch");
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i].type != red.word_types[i])
            throw TypeMismatchError("from_reduction: word type disagrees with reduction");

    Diagram d;
    // one wire per flattened position
    std::vector<int> pos_wire;
    for (const auto& t : red.word_types)
        for (const auto& s : t.simples)
            pos_wire.push_back(d.add_wire(wire_type_for(s, noun_qubits, s_qubits)));

    std::size_t pos = 0;
    for (const auto& w : words) {
        std::vector<int> outs;
        for (std::size_t k = 0; k < w.type.size(); ++k) outs.push_back(pos_wire[pos++]);
        Generator g;
        g.kind = Generator::Kind::Word;
        g.name = w.name;
        g.word_class = w.cls;
        g.ansatz = w.ansatz;
        d.add_node(g, {}, std::move(outs));
    }
    for (const auto& [i, j] : red.cups) {
        int wi = pos_wire[static_cast<std::size_t>(i)];
        int wj = pos_wire[static_cast<std::size_t>(j)];
        if (d.wires[static_cast<std::size_t>(wi)].dim() != d.wires[static_cast<std::size_t>(wj)].dim())
            throw TypeMismatchError("from_reduction: cup joins wires of different dimension");
        Generator g;
        g.kind = Generator::Kind::Cup;
        d.add_node(g, {wi, wj}, {});
    }
    for (int p : red.open) d.outputs.push_back(pos_wire[static_cast<std::size_t>(p)]);
    d.validate();
    return d;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

struct PortRef {
    int node = -1;
    int port = -1;  // index into the word's flattened ports (outs)
};

}  // namespace

Diagram apply_internal_wirings(const Diagram& d, const BasisNamer& basis_namer) {
    // Expect a from_reduction shape: word states plus cups.
    for (const auto& n : d.nodes)
        if (n.gen.kind != Generator::Kind::Word && n.gen.kind != Generator::Kind::Cup)
            throw UnknownClassError("apply_internal_wirings: expected words and cups only");

    const int W = static_cast<int>(d.wires.size());
    UnionFind uf(static_cast<std::size_t>(W));

    // Which word port sits on each original wire (words only).
    std::vector<PortRef> port_of_wire(static_cast<std::size_t>(W));
    for (int ni = 0; ni < static_cast<int>(d.nodes.size()); ++ni) {
        const Node& n = d.nodes[static_cast<std::size_t>(ni)];
        if (n.gen.kind != Generator::Kind::Word) continue;
        for (int p = 0; p < static_cast<int>(n.outs.size()); ++p)
            port_of_wire[static_cast<std::size_t>(n.outs[static_cast<std::size_t>(p)])] =
                PortRef{ni, p};
    }

    // Cup partners.
    std::vector<int> partner(static_cast<std::size_t>(W), -1);
    for (const auto& n : d.nodes) {
        if (n.gen.kind != Generator::Kind::Cup) continue;
        partner[static_cast<std::size_t>(n.ins[0])] = n.ins[1];
        partner[static_cast<std::size_t>(n.ins[1])] = n.ins[0];
        uf.unite(n.ins[0], n.ins[1]);
    }
    // does/not noun pass-through: port 0 and port 3 are one wire.
    for (const auto& n : d.nodes) {
        if (n.gen.kind != Generator::Kind::Word) continue;
        if (n.gen.word_class == WordClass::Does || n.gen.word_class == WordClass::Not)
            uf.unite(n.outs[0], n.outs[3]);
    }

    Diagram nd;

    // A wire class becomes a single new wire once two content anchors claim it.
    std::vector<int> class_wire(static_cast<std::size_t>(W), -1);
    std::vector<int> class_claims(static_cast<std::size_t>(W), 0);
    auto claim_wire = [&](int orig_wire) {
        int root = uf.find(orig_wire);
        auto r = static_cast<std::size_t>(root);
        if (class_wire[r] < 0) class_wire[r] = nd.add_wire(d.wires[static_cast<std::size_t>(orig_wire)]);
        if (++class_claims[r] > 2)
            throw TypeMismatchError("apply_internal_wirings: wire class claimed more than twice");
        return class_wire[r];
    };

    const int noun_qubits = [&] {
        for (const auto& w : d.wires)
            if (w.kind == WireKind::Noun) return w.qubits;
        return 1;
    }();
    const WireType noun_wire{WireKind::Noun, noun_qubits};

    auto add_copy_spider = [&](const std::string& word, std::vector<int> ins,
                               std::vector<int> outs) {
        std::optional<std::string> prefix;
        if (basis_namer) prefix = basis_namer(word);
        if (prefix) {
            // conjugate every leg into the variable basis
            for (int& w : ins) {
                int mid = nd.add_wire(nd.wires[static_cast<std::size_t>(w)]);
                Generator b;
                b.kind = Generator::Kind::Box;
                b.name = *prefix + ".dag";
                nd.add_node(b, {w}, {mid});
                w = mid;
            }
            for (int& w : outs) {
                int mid = nd.add_wire(nd.wires[static_cast<std::size_t>(w)]);
                Generator b;
                b.kind = Generator::Kind::Box;
                b.name = *prefix;
                nd.add_node(b, {mid}, {w});
                w = mid;
            }
        }
        Generator g;
        g.kind = Generator::Kind::Spider;
        g.color = SpiderColor::Z;
        g.phase = 0.0;
        nd.add_node(g, std::move(ins), std::move(outs));
    };

    // Sentence bundles produced by verbs, keyed by the verb's original s wire.
    std::vector<std::vector<int>> bundle_of_wire(static_cast<std::size_t>(W));

    for (int ni = 0; ni < static_cast<int>(d.nodes.size()); ++ni) {
        const Node& n = d.nodes[static_cast<std::size_t>(ni)];
        if (n.gen.kind != Generator::Kind::Word) continue;
        const std::string& name = n.gen.name;
        switch (n.gen.word_class) {
            case WordClass::Noun:
            case WordClass::Opaque: {
                std::vector<int> outs;
                for (int w : n.outs) outs.push_back(claim_wire(w));
                Generator g = n.gen;
                nd.add_node(g, {}, std::move(outs));
                break;
            }
            case WordClass::Adjective: {
                if (n.outs.size() != 2) throw UnknownClassError("adjective must have 2 ports");
                int wc = nd.add_wire(noun_wire);
                Generator core = n.gen;
                core.word_class = WordClass::Opaque;
                nd.add_node(core, {}, {wc});
                add_copy_spider(name, {wc}, {claim_wire(n.outs[0]), claim_wire(n.outs[1])});
                break;
            }
            case WordClass::TVerb:
            case WordClass::DTVerb: {
                const bool dt = n.gen.word_class == WordClass::DTVerb;
                const std::size_t arity = dt ? 3 : 2;
                if (n.outs.size() != arity + 1)
                    throw UnknownClassError("verb has wrong port count");
                std::vector<int> core_wires, bundle;
                for (std::size_t k = 0; k < arity; ++k) {
                    core_wires.push_back(nd.add_wire(noun_wire));
                    bundle.push_back(nd.add_wire(noun_wire));
                }
                Generator core = n.gen;
                core.word_class = WordClass::Opaque;
                nd.add_node(core, {}, core_wires);
                // ports: 0 = subject (n.r), 1 = s, 2.. = objects (n.l)
                add_copy_spider(name, {core_wires[0]}, {claim_wire(n.outs[0]), bundle[0]});
                add_copy_spider(name, {core_wires[1]}, {bundle[1], claim_wire(n.outs[2])});
                if (dt) add_copy_spider(name, {core_wires[2]}, {bundle[2], claim_wire(n.outs[3])});
                bundle_of_wire[static_cast<std::size_t>(n.outs[1])] = bundle;
                break;
            }
            case WordClass::RelPron: {
                if (n.outs.size() != 4) throw UnknownClassError("relative pronoun must have 4 ports");
                add_copy_spider(name, {},
                                {claim_wire(n.outs[0]), claim_wire(n.outs[1]), claim_wire(n.outs[3])});
                break;
            }
            case WordClass::Does:
            case WordClass::Not:
                break;  // wires only; s side handled by the bundle walk
        }
    }

    // Walk each verb's sentence wire through does/not to its consumer.
    std::vector<int> out_map(d.outputs.size(), -1);  // boundary slot -> single new wire
    std::vector<std::vector<int>> out_bundle(d.outputs.size());
    auto boundary_slot = [&](int wire) {
        for (std::size_t s = 0; s < d.outputs.size(); ++s)
            if (d.outputs[s] == wire) return static_cast<int>(s);
        return -1;
    };

    for (int w = 0; w < W; ++w) {
        if (bundle_of_wire[static_cast<std::size_t>(w)].empty()) continue;
        std::vector<int> current = bundle_of_wire[static_cast<std::size_t>(w)];
        int wire = w;
        for (;;) {
            int slot = boundary_slot(wire);
            if (slot >= 0) {
                out_bundle[static_cast<std::size_t>(slot)] = current;
                break;
            }
            int p = partner[static_cast<std::size_t>(wire)];
            if (p < 0) throw TypeMismatchError("dangling sentence wire");
            PortRef pr = port_of_wire[static_cast<std::size_t>(p)];
            const Node& consumer = d.nodes[static_cast<std::size_t>(pr.node)];
            if (consumer.gen.word_class == WordClass::Does ||
                consumer.gen.word_class == WordClass::Not) {
                if (pr.port != 1 && pr.port != 2)
                    throw UnknownClassError("sentence wire enters does/not at a noun port");
                if (consumer.gen.word_class == WordClass::Not) {
                    std::vector<int> next;
                    for (int cw : current) {
                        int w2 = nd.add_wire(nd.wires[static_cast<std::size_t>(cw)]);
                        Generator g;
                        g.kind = Generator::Kind::NegateAll;
                        nd.add_node(g, {cw}, {w2});
                        next.push_back(w2);
                    }
                    current = next;
                }
                wire = consumer.outs[static_cast<std::size_t>(pr.port == 1 ? 2 : 1)];
                continue;
            }
            if (consumer.gen.word_class == WordClass::RelPron) {
                if (pr.port != 2)
                    throw UnknownClassError("sentence wire enters relative pronoun at a noun port");
                for (int cw : current) {
                    Generator g;
                    g.kind = Generator::Kind::Spider;
                    g.color = SpiderColor::Z;
                    g.phase = 0.0;
                    nd.add_node(g, {cw}, {});
                }
                break;
            }
            throw UnknownClassError("unsupported consumer for a sentence wire: " +
                                    consumer.gen.name);
        }
    }

    // Remaining boundary slots are plain (noun or untouched) wires.
    for (std::size_t s = 0; s < d.outputs.size(); ++s) {
        if (!out_bundle[s].empty()) continue;
        out_map[s] = claim_wire(d.outputs[s]);
    }
    for (std::size_t s = 0; s < d.outputs.size(); ++s) {
        if (!out_bundle[s].empty())
            for (int bw : out_bundle[s]) nd.outputs.push_back(bw);
        else
            nd.outputs.push_back(out_map[s]);
    }

    nd.validate();
    return nd;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

using tensor::Labeled;
using tensor::Tensor;

Labeled node_tensor(const Diagram& d, const Node& n, const Bindings& bindings) {
    Labeled lt;
    for (int w : n.ins) lt.labels.push_back(w);
    for (int w : n.outs) lt.labels.push_back(w);
    std::vector<std::size_t> dims;
    for (int w : lt.labels) dims.push_back(d.wires[static_cast<std::size_t>(w)].dim());

    switch (n.gen.kind) {
        case Generator::Kind::Word:
        case Generator::Kind::Box: {
            auto it = bindings.find(n.gen.name);
            if (it == bindings.end())
                throw ShapeMismatchError("no binding for '" + n.gen.name + "'");
            if (it->second.dims != dims)
                throw ShapeMismatchError("binding shape mismatch for '" + n.gen.name + "'");
            lt.t = it->second;
            return lt;
        }
        case Generator::Kind::Cap:
        case Generator::Kind::Cup: {
            Tensor t(dims);
            for (std::size_t i = 0; i < dims[0]; ++i) t.data[i * dims[1] + i] = 1.0;
            lt.t = std::move(t);
            return lt;
        }
        case Generator::Kind::Spider: {
            const std::size_t deg = dims.size();
            if (deg == 0) throw Error("spider must have at least one leg");
            const std::size_t dim = dims[0];
            for (std::size_t x : dims)
                if (x != dim) throw ShapeMismatchError("spider legs must share a dimension");
            if (n.gen.color == SpiderColor::Z) {
                if (n.gen.phase != 0.0 && dim != 2)
                    throw Error("phased spiders are only supported on single-qubit wires");
                Tensor t(dims);
                for (std::size_t i = 0; i < dim; ++i) {
                    std::size_t idx = 0;
                    for (std::size_t k = 0; k < deg; ++k) idx = idx * dim + i;
                    t.data[idx] = (i + 1 == dim && n.gen.phase != 0.0)
                                      ? std::exp(cx{0.0, n.gen.phase})
                                      : cx{1.0, 0.0};
                }
                lt.t = std::move(t);
                return lt;
            }
            // X spider = Z spider conjugated by H on every leg.
            if (dim != 2) throw Error("X spiders are only supported on single-qubit wires");
            Tensor xt(dims);
            const double inv = 1.0 / std::sqrt(2.0);
            for (std::size_t flat = 0; flat < xt.data.size(); ++flat) {
                cx acc = 0.0;
                for (std::size_t i = 0; i < 2; ++i) {
                    cx prod = (i == 1) ? std::exp(cx{0.0, n.gen.phase}) : cx{1.0, 0.0};
                    std::size_t rem = flat;
                    for (std::size_t k = deg; k-- > 0;) {
                        std::size_t bit = rem % 2;
                        rem /= 2;
                        prod *= (bit == 1 && i == 1) ? -inv : inv;
                    }
                    acc += prod;
                }
                xt.data[flat] = acc;
            }
            lt.t = std::move(xt);
            return lt;
        }
        case Generator::Kind::NegateAll: {
            Tensor t(dims);
            const std::size_t dim = dims[0];
            for (std::size_t i = 0; i < dim; ++i) t.data[i * dim + (dim - 1 - i)] = 1.0;
            lt.t = std::move(t);
            return lt;
        }
    }
    throw Error("unreachable generator kind");
}

}  // namespace

tensor::Tensor evaluate(const Diagram& d, const Bindings& bindings, unsigned order_seed) {
    d.validate();
    std::vector<Labeled> parts;
    for (const auto& n : d.nodes) parts.push_back(node_tensor(d, n, bindings));

    // Boundary label list; a wire appearing twice on the boundary (a bare
    // through-wire) is split with an explicit identity tensor.
    std::vector<int> order;
    std::vector<int> seen;
    int fresh = static_cast<int>(d.wires.size());
    auto push_boundary = [&](int w) {
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
            int alias = fresh++;
            Labeled id;
            id.t = Tensor::identity(d.wires[static_cast<std::size_t>(w)].dim());
            id.labels = {w, alias};
            parts.push_back(std::move(id));
            order.push_back(alias);
        } else {
            seen.push_back(w);
            order.push_back(w);
        }
    };
    for (int w : d.inputs) push_boundary(w);
    for (int w : d.outputs) push_boundary(w);

    if (order_seed != 0) {
        std::mt19937 rng(order_seed);
        std::shuffle(parts.begin(), parts.end(), rng);
    }
    return tensor::contract_network(std::move(parts), order).t;
}

static cx flat_overlap(const tensor::Tensor& a, const tensor::Tensor& b) {
    if (a.data.size() != b.data.size())
        throw TypeMismatchError("compare: output dimensions differ");
    cx acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) acc += std::conj(a.data[i]) * b.data[i];
    return acc;
}

double compare(const Diagram& d1, const Diagram& d2, const Bindings& bindings) {
    auto types_of = [](const Diagram& d) {
        std::vector<std::size_t> v;
        for (int w : d.outputs) v.push_back(d.wires[static_cast<std::size_t>(w)].dim());
        return v;
    };
    if (types_of(d1) != types_of(d2))
        throw TypeMismatchError("compare: output wire types differ");
    auto e1 = evaluate(d1, bindings);
    auto e2 = evaluate(d2, bindings);
    return std::norm(flat_overlap(e1, e2));
}

double compare_normalized(const Diagram& d1, const Diagram& d2, const Bindings& bindings) {
    auto types_of = [](const Diagram& d) {
        std::vector<std::size_t> v;
        for (int w : d.outputs) v.push_back(d.wires[static_cast<std::size_t>(w)].dim());
        return v;
    };
    if (types_of(d1) != types_of(d2))
        throw TypeMismatchError("compare: output wire types differ");
    auto e1 = evaluate(d1, bindings);
    auto e2 = evaluate(d2, bindings);
    double n1 = 0.0, n2 = 0.0;
    for (const auto& v : e1.data) n1 += std::norm(v);
    for (const auto& v : e2.data) n2 += std::norm(v);
    if (n1 == 0.0 || n2 == 0.0) return 0.0;
    return std::norm(flat_overlap(e1, e2)) / (n1 * n2);
}

Diagram compose_sentences(const Diagram& d1, const Diagram& d2,
                          const std::vector<std::pair<int, std::string>>& shared) {
    if (d2.nodes.empty() && d2.wires.empty() && shared.empty()) return d1;

    Diagram out = d1;
    const int offset = static_cast<int>(d1.wires.size());
    for (const auto& w : d2.wires) out.wires.push_back(w);

    // d1 output wire that feeds each shared d2 noun
    std::map<std::string, int> feed;
    std::vector<bool> consumed(d1.outputs.size(), false);
    for (const auto& [oi, name] : shared) {
        if (oi < 0 || oi >= static_cast<int>(d1.outputs.size()))
            throw TypeMismatchError("compose: bad output index");
        feed[name] = d1.outputs[static_cast<std::size_t>(oi)];
        consumed[static_cast<std::size_t>(oi)] = true;
    }

    // wire remap for d2: identity shift, except stripped noun wires
    std::vector<int> remap(d2.wires.size());
    for (std::size_t w = 0; w < d2.wires.size(); ++w) remap[w] = offset + static_cast<int>(w);

    std::vector<bool> drop_node(d2.nodes.size(), false);
    std::map<std::string, int> found;
    for (std::size_t ni = 0; ni < d2.nodes.size(); ++ni) {
        const Node& n = d2.nodes[ni];
        if (n.gen.kind != Generator::Kind::Word) continue;
        auto it = feed.find(n.gen.name);
        if (it == feed.end()) continue;
        if (found.count(n.gen.name)) continue;  // strip the first occurrence only
        if (n.outs.size() != 1)
            throw TypeMismatchError("compose: shared word '" + n.gen.name + "' is not a noun");
        int w2 = n.outs[0];
        if (out.wires[static_cast<std::size_t>(it->second)].dim() !=
            d2.wires[static_cast<std::size_t>(w2)].dim())
            throw TypeMismatchError("compose: wire dimension mismatch for '" + n.gen.name + "'");
        remap[static_cast<std::size_t>(w2)] = it->second;
        drop_node[ni] = true;
        found[n.gen.name] = static_cast<int>(ni);
    }
    for (const auto& kv : feed)
        if (!found.count(kv.first))
            throw TypeMismatchError("compose: shared word '" + kv.first + "' not found in d2");

    for (std::size_t ni = 0; ni < d2.nodes.size(); ++ni) {
        if (drop_node[ni]) continue;
        Node n = d2.nodes[ni];
        for (int& w : n.ins) w = remap[static_cast<std::size_t>(w)];
        for (int& w : n.outs) w = remap[static_cast<std::size_t>(w)];
        out.nodes.push_back(std::move(n));
    }

    out.outputs.clear();
    for (std::size_t s = 0; s < d1.outputs.size(); ++s)
        if (!consumed[s]) out.outputs.push_back(d1.outputs[s]);
    for (int w : d2.outputs) out.outputs.push_back(remap[static_cast<std::size_t>(w)]);
    for (int w : d2.inputs) out.inputs.push_back(remap[static_cast<std::size_t>(w)]);

    // Drop wires of stripped states that became unused duplicates.
    out.validate();
    return out;
}

Diagram merge_spiders(const Diagram& d, int node_a, int node_b) {
    const Node& a = d.nodes.at(static_cast<std::size_t>(node_a));
    const Node& b = d.nodes.at(static_cast<std::size_t>(node_b));
    if (a.gen.kind != Generator::Kind::Spider || b.gen.kind != Generator::Kind::Spider)
        throw Error("merge_spiders: both nodes must be spiders");
    if (a.gen.color != b.gen.color) throw Error("merge_spiders: colors differ");

    auto legs = [](const Node& n) {
        std::vector<int> v = n.ins;
        v.insert(v.end(), n.outs.begin(), n.outs.end());
        return v;
    };
    std::vector<int> la = legs(a), lb = legs(b);
    std::vector<int> shared;
    for (int w : la)
        if (std::find(lb.begin(), lb.end(), w) != lb.end()) shared.push_back(w);
    if (shared.empty()) throw Error("merge_spiders: spiders are not connected");

    Diagram out = d;
    Node merged;
    merged.gen = a.gen;
    merged.gen.phase = canonical_angle(a.gen.phase + b.gen.phase);
    auto keep = [&](const std::vector<int>& v, std::vector<int>& dst) {
        for (int w : v)
            if (std::find(shared.begin(), shared.end(), w) == shared.end()) dst.push_back(w);
    };
    keep(a.ins, merged.ins);
    keep(b.ins, merged.ins);
    keep(a.outs, merged.outs);
    keep(b.outs, merged.outs);

    // remove the two old nodes (higher index first), add the merged one
    int hi = std::max(node_a, node_b), lo = std::min(node_a, node_b);
    out.nodes.erase(out.nodes.begin() + hi);
    out.nodes.erase(out.nodes.begin() + lo);
    out.nodes.push_back(std::move(merged));

    // interior shared wires disappear; rebuild wire ids densely
    std::vector<int> remap(out.wires.size());
    std::vector<WireType> new_wires;
    for (std::size_t w = 0; w < out.wires.size(); ++w) {
        if (std::find(shared.begin(), shared.end(), static_cast<int>(w)) != shared.end()) {
            remap[w] = -1;
        } else {
            remap[w] = static_cast<int>(new_wires.size());
            new_wires.push_back(out.wires[w]);
        }
    }
    out.wires = std::move(new_wires);
    auto apply = [&](std::vector<int>& v) {
        for (int& w : v) {
            w = remap[static_cast<std::size_t>(w)];
            if (w < 0) throw Error("merge_spiders: boundary wire was interior");
        }
    };
    for (auto& n : out.nodes) {
        apply(n.ins);
        apply(n.outs);
    }
    apply(out.inputs);
    apply(out.outputs);
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// export

static char kind_letter(const WireType& t) { return t.kind == WireKind::Sentence ? 's' : 'n'; }

std::string to_text(const Diagram& d) {
    std::ostringstream os;
    for (std::size_t w = 0; w < d.wires.size(); ++w)
        os << "WIRE w" << w << ' ' << kind_letter(d.wires[w]) << ' ' << d.wires[w].qubits << '\n';
    auto wire_list = [&](const std::vector<int>& v) {
        std::string s;
        for (int w : v) s += " w" + std::to_string(w);
        return s;
    };
    for (const auto& n : d.nodes) {
        switch (n.gen.kind) {
            case Generator::Kind::Word: {
                os << "WORD " << n.gen.name << " [";
                for (std::size_t k = 0; k < n.outs.size(); ++k)
                    os << (k ? " " : "")
                       << kind_letter(d.wires[static_cast<std::size_t>(n.outs[k])]);
                os << "]" << wire_list(n.outs) << '\n';
                break;
            }
            case Generator::Kind::Cup:
                os << "CUP" << wire_list(n.ins) << '\n';
                break;
            case Generator::Kind::Cap:
                os << "CAP" << wire_list(n.outs) << '\n';
                break;
            case Generator::Kind::Spider:
                os << "SPIDER " << (n.gen.color == SpiderColor::Z ? 'Z' : 'X') << ' '
                   << n.ins.size() << ' ' << n.outs.size() << ' ' << fmt_double(n.gen.phase)
                   << wire_list(n.ins) << " ->" << wire_list(n.outs) << '\n';
                break;
            case Generator::Kind::NegateAll:
                os << "NEG" << wire_list(n.ins) << " ->" << wire_list(n.outs) << '\n';
                break;
            case Generator::Kind::Box:
                os << "BOX " << n.gen.name << wire_list(n.ins) << " ->" << wire_list(n.outs)
                   << '\n';
                break;
        }
    }
    if (!d.inputs.empty()) os << "IN" << wire_list(d.inputs) << '\n';
    if (!d.outputs.empty()) os << "OUT" << wire_list(d.outputs) << '\n';
    return os.str();
}

std::string to_dot(const Diagram& d) {
    std::ostringstream os;
    os << "digraph diagram {\n  rankdir=TB;\n";
    for (std::size_t ni = 0; ni < d.nodes.size(); ++ni) {
        const Node& n = d.nodes[ni];
        std::string label, shape = "box";
        switch (n.gen.kind) {
            case Generator::Kind::Word: label = n.gen.name; shape = "triangle"; break;
            case Generator::Kind::Cup: label = "cup"; shape = "ellipse"; break;
            case Generator::Kind::Cap: label = "cap"; shape = "ellipse"; break;
            case Generator::Kind::Spider:
                label = std::string(n.gen.color == SpiderColor::Z ? "Z" : "X") + "(" +
                        fmt_double(n.gen.phase) + ")";
                shape = "circle";
                break;
            case Generator::Kind::NegateAll: label = "X^n"; break;
            case Generator::Kind::Box: label = n.gen.name; break;
        }
        os << "  n" << ni << " [label=\"" << label << "\", shape=" << shape << "];\n";
    }
    for (std::size_t bi = 0; bi < d.inputs.size(); ++bi)
        os << "  in" << bi << " [label=\"in" << bi << "\", shape=plaintext];\n";
    for (std::size_t bi = 0; bi < d.outputs.size(); ++bi)
        os << "  out" << bi << " [label=\"out" << bi << "\", shape=plaintext];\n";

    // each wire: find its two endpoints
    struct End {
        std::string id;
    };
    std::vector<std::vector<std::string>> ends(d.wires.size());
    for (std::size_t ni = 0; ni < d.nodes.size(); ++ni) {
        for (int w : d.nodes[ni].ins) ends[static_cast<std::size_t>(w)].push_back("n" + std::to_string(ni));
        for (int w : d.nodes[ni].outs)
            ends[static_cast<std::size_t>(w)].push_back("n" + std::to_string(ni));
    }
    for (std::size_t bi = 0; bi < d.inputs.size(); ++bi)
        ends[static_cast<std::size_t>(d.inputs[bi])].push_back("in" + std::to_string(bi));
    for (std::size_t bi = 0; bi < d.outputs.size(); ++bi)
        ends[static_cast<std::size_t>(d.outputs[bi])].push_back("out" + std::to_string(bi));
    for (std::size_t w = 0; w < ends.size(); ++w)
        if (ends[w].size() == 2)
            os << "  " << ends[w][0] << " -> " << ends[w][1] << " [label=\"w" << w << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace qnlc::diagram
