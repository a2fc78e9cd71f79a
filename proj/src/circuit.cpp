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

#include "qnlc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "json.hpp"

namespace qnlc::circuit {

bool ParamTable::has(const std::string& word, int slot) const {
    return values_.count({word, slot}) > 0;
}

double ParamTable::get(const std::string& word, int slot) const {
    auto it = values_.find({word, slot});
    if (it == values_.end())
        throw MissingParamError("missing parameter " + word + "." + std::to_string(slot));
    return it->second;
}

void ParamTable::set(const std::string& word, int slot, double v) {
    if (!std::isfinite(v)) throw Error("parameter value must be finite");
    values_[{word, slot}] = v;
}

std::string ParamTable::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, v] : values_)
        j[key.first + "." + std::to_string(key.second)] = v;
    return j.dump(2) + "\n";
}

ParamTable ParamTable::from_json(const std::string& text) {
    ParamTable p;
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw IoError("params file: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        auto dot = key.rfind('.');
        if (dot == std::string::npos || dot + 1 >= key.size())
            throw IoError("params file: bad key '" + key + "'");
        p.set(key.substr(0, dot), std::stoi(key.substr(dot + 1)), it.value().get<double>());
    }
    return p;
}

double GateAngle::resolve(const ParamTable& p) const {
    if (!ref) return lit;
    return lit + sign * p.get(ref->word, ref->slot);
}

Gate Gate::cnot(int c, int t, std::string owner) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.q0 = c;
    g.q1 = t;
    g.owner = std::move(owner);
    return g;
}
Gate Gate::h(int q, std::string owner) {
    Gate g;
    g.kind = GateKind::H;
    g.q0 = q;
    g.owner = std::move(owner);
    return g;
}
Gate Gate::x(int q, std::string owner) {
    Gate g;
    g.kind = GateKind::X;
    g.q0 = q;
    g.owner = std::move(owner);
    return g;
}
Gate Gate::rz(int q, GateAngle a, std::string owner) {
    Gate g;
    g.kind = GateKind::RZ;
    g.q0 = q;
    g.angle = std::move(a);
    g.owner = std::move(owner);
    return g;
}
Gate Gate::rx(int q, GateAngle a, std::string owner) {
    Gate g;
    g.kind = GateKind::RX;
    g.q0 = q;
    g.angle = std::move(a);
    g.owner = std::move(owner);
    return g;
}

cx ScalarExpr::resolve(const ParamTable& p) const {
    cx v = lit;
    for (const auto& h : halves)
        v *= std::exp(cx{0.0, h.coeff * p.get(h.ref.word, h.ref.slot) / 2.0});
    return v;
}

void ScalarExpr::mul_half(const ParamRef& r, int coeff) {
    for (std::size_t i = 0; i < halves.size(); ++i) {
        if (halves[i].ref == r) {
            halves[i].coeff += coeff;
            if (halves[i].coeff == 0) halves.erase(halves.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    }
    halves.push_back({r, coeff});
}

bool Circuit::bound() const {
    if (!scalar.literal()) return false;
    for (const auto& g : gates)
        if ((g.kind == GateKind::RZ || g.kind == GateKind::RX) && g.angle.symbolic()) return false;
    return true;
}

void Circuit::validate() const {
    auto check_q = [&](int q) {
        if (q < 0 || q >= n_qubits) throw Error("circuit: qubit index out of range");
    };
    std::vector<bool> posted(static_cast<std::size_t>(n_qubits), false);
    for (const auto& g : gates) {
        check_q(g.q0);
        if (g.kind == GateKind::CNOT) {
            check_q(g.q1);
            if (g.q0 == g.q1) throw Error("circuit: CNOT with equal qubits");
        }
    }
    for (const auto& p : posts) {
        check_q(p.qubit);
        if (posted[static_cast<std::size_t>(p.qubit)])
            throw Error("circuit: qubit postselected twice");
        posted[static_cast<std::size_t>(p.qubit)] = true;
        if (p.outcome != 0 && p.outcome != 1) throw Error("circuit: bad outcome");
    }
    for (int q : outputs) {
        check_q(q);
        if (posted[static_cast<std::size_t>(q)])
            throw Error("circuit: postselected qubit in outputs");
    }
}

Stats stats(const Circuit& c) {
    Stats s;
    s.qubits = c.n_qubits;
    std::vector<int> depth(static_cast<std::size_t>(c.n_qubits), 0);
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::CNOT || !g.owner.empty()) continue;
        ++s.cnot_count;
        int d = std::max(depth[static_cast<std::size_t>(g.q0)],
                         depth[static_cast<std::size_t>(g.q1)]) +
                1;
        depth[static_cast<std::size_t>(g.q0)] = d;
        depth[static_cast<std::size_t>(g.q1)] = d;
        s.cnot_depth = std::max(s.cnot_depth, d);
    }
    return s;
}

WordBlock instantiate_word(const std::string& name, WordClass cls, AnsatzKind ansatz, int layers) {
    if (layers < 1) throw Error("instantiate_word: layers must be >= 1");
    WordBlock b;
    auto slot = [&](int layer, int local) {
        return GateAngle{0.0, ParamRef{name, layer * param_stride(cls, ansatz.family) + local}, 1};
    };
    switch (cls) {
        case WordClass::Noun:
        case WordClass::Adjective: {
            b.n_qubits = layers;
            for (int l = 0; l < layers; ++l) {
                b.gates.push_back(Gate::rx(l, slot(l, 1), name));
                b.gates.push_back(Gate::rz(l, slot(l, 0), name));
            }
            return b;
        }
        case WordClass::TVerb:
        case WordClass::DTVerb: {
            const int arity = cls == WordClass::DTVerb ? 3 : 2;
            b.n_qubits = arity * layers;
            const bool svd = ansatz.family == AnsatzFamily::SvdVerb;
            const bool euler = ansatz.family == AnsatzFamily::EulerVerb || svd;
            if (svd) b.n_aux = layers;
            for (int l = 0; l < layers; ++l) {
                const int u = l;  // subject leg; object legs follow arg-major
                b.gates.push_back(Gate::h(u, name));
                for (int a = 1; a < arity; ++a)
                    b.gates.push_back(Gate::cnot(u, a * layers + l, name));
                if (svd) {
                    const int aux = arity * layers + l;
                    const int base = arity == 2 ? 3 : 6;
                    b.gates.push_back(Gate::h(aux, name));
                    b.gates.push_back(Gate::rz(aux, slot(l, base + 0), name));
                    b.gates.push_back(Gate::cnot(u, aux, name));
                    b.gates.push_back(Gate::rz(aux, slot(l, base + 1), name));
                    b.gates.push_back(Gate::cnot(u, aux, name));
                    b.gates.push_back(Gate::h(aux, name));
                    b.posts.push_back(Post{aux, Basis::Z, 0});
                }
                if (euler) {
                    for (int a = 1; a < arity; ++a) {
                        const int v = a * layers + l;
                        const int base = 3 * (a - 1);
                        b.gates.push_back(Gate::rz(v, slot(l, base + 2), name));
                        b.gates.push_back(Gate::rx(v, slot(l, base + 1), name));
                        b.gates.push_back(Gate::rz(v, slot(l, base + 0), name));
                    }
                }
            }
            return b;
        }
        case WordClass::RelPron:
        case WordClass::Does:
        case WordClass::Not:
            b.n_qubits = 0;  // wirings only, no preparation gates
            return b;
        case WordClass::Opaque:
            break;
    }
    throw UnknownClassError("instantiate_word: no gate template for class " + to_string(cls));
}

Circuit bind(const Circuit& c, const ParamTable& p) {
    Circuit out = c;
    for (auto& g : out.gates) {
        if (g.kind != GateKind::RZ && g.kind != GateKind::RX) continue;
        if (!g.angle.symbolic()) continue;
        g.angle = GateAngle{g.angle.resolve(p), std::nullopt, 1};
    }
    out.scalar.lit = c.scalar.resolve(p);
    out.scalar.halves.clear();
    return out;
}

Circuit elide_zero_rotations(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    for (const auto& g : c.gates) {
        if ((g.kind == GateKind::RZ || g.kind == GateKind::RX) && !g.angle.symbolic() &&
            g.angle.lit == 0.0)
            continue;
        out.gates.push_back(g);
    }
    return out;
}

static bool gate_eq(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.q0 != b.q0 || a.q1 != b.q1) return false;
    if (a.kind == GateKind::RZ || a.kind == GateKind::RX) {
        if (a.angle.lit != b.angle.lit || a.angle.sign != b.angle.sign) return false;
        if (a.angle.ref.has_value() != b.angle.ref.has_value()) return false;
        if (a.angle.ref && !(*a.angle.ref == *b.angle.ref)) return false;
    }
    return true;
}

bool gate_identical(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits || a.gates.size() != b.gates.size()) return false;
    for (std::size_t i = 0; i < a.gates.size(); ++i)
        if (!gate_eq(a.gates[i], b.gates[i])) return false;
    if (a.posts.size() != b.posts.size()) return false;
    for (std::size_t i = 0; i < a.posts.size(); ++i)
        if (a.posts[i].qubit != b.posts[i].qubit || a.posts[i].basis != b.posts[i].basis ||
            a.posts[i].outcome != b.posts[i].outcome)
            return false;
    return a.outputs == b.outputs;
}

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::CNOT: return "CNOT";
        case GateKind::RZ: return "RZ";
        case GateKind::RX: return "RX";
        case GateKind::H: return "H";
        case GateKind::X: return "X";
    }
    return "?";
}

static std::string angle_token(const GateAngle& a) {
    if (!a.ref) return fmt_double(a.lit);
    std::string s = a.sign < 0 ? "-$" : "$";
    s += a.ref->word + "." + std::to_string(a.ref->slot);
    if (a.lit != 0.0) s += "+" + fmt_double(a.lit);
    return s;
}

static GateAngle parse_angle(const std::string& tok) {
    GateAngle a;
    std::string t = tok;
    if (t.empty()) throw IoError("circuit text: empty angle token");
    if (t[0] == '$' || (t.size() > 1 && t[0] == '-' && t[1] == '$')) {
        a.sign = t[0] == '-' ? -1 : 1;
        t = t.substr(t[0] == '-' ? 2 : 1);
        auto plus = t.rfind('+');
        if (plus != std::string::npos && t.rfind('.') < plus) {
            a.lit = std::strtod(t.substr(plus + 1).c_str(), nullptr);
            t = t.substr(0, plus);
        }
        auto dot = t.rfind('.');
        if (dot == std::string::npos) throw IoError("circuit text: bad parameter token '" + tok + "'");
        a.ref = ParamRef{t.substr(0, dot), std::stoi(t.substr(dot + 1))};
        return a;
    }
    a.lit = std::strtod(t.c_str(), nullptr);
    return a;
}

std::string to_text(const Circuit& c) {
    std::ostringstream os;
    os << "QUBITS " << c.n_qubits << '\n';
    os << "SCALAR " << fmt_double(c.scalar.lit.real()) << ' ' << fmt_double(c.scalar.lit.imag())
       << '\n';
    for (const auto& h : c.scalar.halves)
        os << "SCALARHALF " << h.coeff << " $" << h.ref.word << '.' << h.ref.slot << '\n';
    std::string block;
    auto close_block = [&] {
        if (!block.empty()) {
            os << "ENDBLOCK\n";
            block.clear();
        }
    };
    for (const auto& g : c.gates) {
        if (g.owner != block) {
            close_block();
            if (!g.owner.empty()) {
                os << "BLOCK " << g.owner << '\n';
                block = g.owner;
            }
        }
        switch (g.kind) {
            case GateKind::CNOT: os << "CNOT " << g.q0 << ' ' << g.q1; break;
            case GateKind::H: os << "H " << g.q0; break;
            case GateKind::X: os << "X " << g.q0; break;
            case GateKind::RZ: os << "RZ " << g.q0 << ' ' << angle_token(g.angle); break;
            case GateKind::RX: os << "RX " << g.q0 << ' ' << angle_token(g.angle); break;
        }
        os << '\n';
    }
    close_block();
    for (const auto& p : c.posts)
        os << "POST " << p.qubit << ' ' << (p.basis == Basis::Z ? 'Z' : 'X') << ' ' << p.outcome
           << '\n';
    if (!c.outputs.empty()) {
        os << "OUT";
        for (int q : c.outputs) os << ' ' << q;
        os << '\n';
    }
    return os.str();
}

Circuit from_text(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    std::string block;
    bool have_qubits = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        if (op == "QUBITS") {
            ls >> c.n_qubits;
            have_qubits = true;
        } else if (op == "SCALAR") {
            double re = 1, im = 0;
            ls >> re >> im;
            c.scalar.lit = {re, im};
        } else if (op == "SCALARHALF") {
            int coeff;
            std::string tok;
            ls >> coeff >> tok;
            if (tok.size() < 2 || tok[0] != '$') throw IoError("bad SCALARHALF line");
            tok = tok.substr(1);
            auto dot = tok.rfind('.');
            c.scalar.halves.push_back(
                {ParamRef{tok.substr(0, dot), std::stoi(tok.substr(dot + 1))}, coeff});
        } else if (op == "BLOCK") {
            ls >> block;
        } else if (op == "ENDBLOCK") {
            block.clear();
        } else if (op == "CNOT") {
            int a, b;
            ls >> a >> b;
            c.gates.push_back(Gate::cnot(a, b, block));
        } else if (op == "H" || op == "X") {
            int q;
            ls >> q;
            c.gates.push_back(op == "H" ? Gate::h(q, block) : Gate::x(q, block));
        } else if (op == "RZ" || op == "RX") {
            int q;
            std::string tok;
            ls >> q >> tok;
            GateAngle a = parse_angle(tok);
            c.gates.push_back(op == "RZ" ? Gate::rz(q, a, block) : Gate::rx(q, a, block));
        } else if (op == "POST") {
            int q, o;
            std::string b;
            ls >> q >> b >> o;
            c.posts.push_back(Post{q, b == "Z" ? Basis::Z : Basis::X, o});
        } else if (op == "OUT") {
            int q;
            while (ls >> q) c.outputs.push_back(q);
        } else {
            throw IoError("circuit text: unknown line '" + line + "'");
        }
    }
    if (!have_qubits) throw IoError("circuit text: missing QUBITS header");
    c.validate();
    return c;
}

}  // namespace qnlc::circuit
