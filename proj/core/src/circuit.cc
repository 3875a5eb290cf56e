// Copyright 2026 The qut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qut/circuit.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qut/random.h"

namespace qut {

Circuit::Circuit(std::size_t num_qubits, std::string name) : num_qubits_(num_qubits), name_(std::move(name)) {
    if (num_qubits == 0 || num_qubits > 32) {
        throw std::invalid_argument("circuit width must be in [1, 32]");
    }
}

void Circuit::check(const GateApplication &gate) const {
    gate.validate();
    for (auto t : gate.targets) {
        if (t >= num_qubits_) {
            throw std::invalid_argument(
                "target qubit " + std::to_string(t) + " out of range for " + std::to_string(num_qubits_) +
                "-qubit circuit");
        }
    }
}

Circuit &Circuit::append(GateApplication gate) {
    check(gate);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(GateKind kind, std::vector<std::uint32_t> targets, std::vector<double> params) {
    return append(GateApplication{kind, std::move(targets), std::move(params), {}});
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot append circuits of different widths");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

void Circuit::insert(std::size_t position, GateApplication gate) {
    if (position > gates_.size()) {
        throw std::out_of_range("insert position past end of circuit");
    }
    check(gate);
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), std::move(gate));
}

void Circuit::erase(std::size_t position) {
    if (position >= gates_.size()) {
        throw std::out_of_range("erase position past end of circuit");
    }
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(position));
}

void Circuit::replace(std::size_t position, GateApplication gate) {
    if (position >= gates_.size()) {
        throw std::out_of_range("replace position past end of circuit");
    }
    check(gate);
    gates_[position] = std::move(gate);
}

Circuit compose(const Circuit &first, const Circuit &second) {
    Circuit out = first;
    out.append(second);
    return out;
}

Circuit invert_circuit(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(), circuit.name().empty() ? std::string() : circuit.name() + "_dg");
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.append(inverse_gate(*it));
    }
    return out;
}

Circuit embed(const Circuit &circuit, std::size_t num_qubits, std::uint32_t offset) {
    if (circuit.num_qubits() + offset > num_qubits) {
        throw std::invalid_argument("embedded circuit does not fit the target register");
    }
    Circuit out(num_qubits, circuit.name());
    for (auto g : circuit.gates()) {
        for (auto &t : g.targets) {
            t += offset;
        }
        out.append(std::move(g));
    }
    return out;
}

std::uint64_t structural_hash(const Circuit &circuit) {
    std::uint64_t h = splitmix64(circuit.num_qubits());
    auto mix = [&h](std::uint64_t v) { h = splitmix64(h ^ v); };
    for (const auto &g : circuit.gates()) {
        mix(static_cast<std::uint64_t>(g.kind) + 0x100);
        for (auto t : g.targets) {
            mix(t);
        }
        for (double p : g.params) {
            mix(std::bit_cast<std::uint64_t>(p));
        }
        for (const auto &e : g.matrix.entries) {
            mix(std::bit_cast<std::uint64_t>(e.real()));
            mix(std::bit_cast<std::uint64_t>(e.imag()));
        }
    }
    return h;
}

Circuit random_circuit(std::size_t num_qubits, std::size_t depth, std::uint64_t seed) {
    if (num_qubits == 0 || depth == 0) {
        throw std::invalid_argument("random_circuit requires num_qubits >= 1 and depth >= 1");
    }
    Rng rng(seed);
    const std::size_t max_arity = std::min<std::size_t>(num_qubits, 3);
    std::vector<GateKind> pool;
    for (auto k : catalog_kinds()) {
        if (k != GateKind::I) {
            pool.push_back(k);
        }
    }

    Circuit out(num_qubits, "random_n" + std::to_string(num_qubits) + "_d" + std::to_string(depth));
    std::vector<std::uint32_t> order(num_qubits);
    for (std::size_t layer = 0; layer < depth; ++layer) {
        std::iota(order.begin(), order.end(), 0u);
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.below(i)]);
        }
        std::size_t cursor = 0;
        while (cursor < num_qubits) {
            std::size_t free = std::min(max_arity, num_qubits - cursor);
            std::vector<GateKind> fits;
            for (auto k : pool) {
                if (gate_info(k).arity <= free) {
                    fits.push_back(k);
                }
            }
            GateKind kind = fits[rng.below(fits.size())];
            const GateInfo &info = gate_info(kind);
            std::vector<std::uint32_t> targets(order.begin() + static_cast<std::ptrdiff_t>(cursor),
                                               order.begin() + static_cast<std::ptrdiff_t>(cursor + info.arity));
            std::vector<double> params(info.num_params);
            for (auto &p : params) {
                p = 2.0 * std::numbers::pi * rng.uniform();
            }
            out.append(kind, std::move(targets), std::move(params));
            cursor += info.arity;
        }
    }
    return out;
}

}  // namespace qut
