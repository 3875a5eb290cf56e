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

#include "qut/state_prep.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qut {

namespace {

constexpr double kZeroAngle = 1e-14;

bool all_zero(std::span<const double> angles) {
    for (double a : angles) {
        if (std::abs(a) >= kZeroAngle) {
            return false;
        }
    }
    return true;
}

}  // namespace

void append_multiplexed_rotation(Circuit &circuit, GateKind kind, std::uint32_t target,
                                 std::span<const std::uint32_t> controls, std::span<const double> angles) {
    if (kind != GateKind::RY && kind != GateKind::RZ) {
        throw std::invalid_argument("multiplexed rotation must be ry or rz");
    }
    if (angles.size() != (std::size_t{1} << controls.size())) {
        throw std::invalid_argument("multiplexed rotation needs 2^controls angles");
    }
    if (all_zero(angles)) {
        return;
    }
    if (controls.empty()) {
        circuit.append(kind, {target}, {angles[0]});
        return;
    }
    // Split on the highest control c: R(a0 | c=0), R(a1 | c=1) becomes
    // M((a0+a1)/2) CX(c,t) M((a0-a1)/2) CX(c,t), since X R(x) X = R(-x)
    // for rotations about y or z.
    std::size_t half = angles.size() / 2;
    std::vector<double> sum(half), diff(half);
    for (std::size_t i = 0; i < half; ++i) {
        sum[i] = (angles[i] + angles[i + half]) / 2;
        diff[i] = (angles[i] - angles[i + half]) / 2;
    }
    auto lower = controls.first(controls.size() - 1);
    std::uint32_t top = controls.back();
    append_multiplexed_rotation(circuit, kind, target, lower, sum);
    if (all_zero(diff)) {
        return;
    }
    circuit.append(GateKind::CX, {top, target});
    append_multiplexed_rotation(circuit, kind, target, lower, diff);
    circuit.append(GateKind::CX, {top, target});
}

StatePrep synthesize_state_prep_with_phase(const StateVector &target) {
    const std::size_t n = target.num_qubits();
    std::vector<Complex> v(target.amplitudes().begin(), target.amplitudes().end());
    Circuit disentangle(n);

    for (std::uint32_t q = 0; q < n; ++q) {
        const std::size_t pairs = v.size() / 2;
        std::vector<double> rz(pairs), ry(pairs);
        std::vector<Complex> next(pairs);
        for (std::size_t k = 0; k < pairs; ++k) {
            Complex a = v[2 * k], b = v[2 * k + 1];
            double ma = std::abs(a), mb = std::abs(b);
            double r = std::hypot(ma, mb);
            if (r == 0.0) {
                continue;
            }
            double alpha = ma > 0 ? std::arg(a) : std::arg(b);
            double beta = mb > 0 ? std::arg(b) : alpha;
            // rz(-(beta - alpha)) equalizes the two phases at their mean;
            // ry(-theta) then moves all weight onto the |0> component.
            rz[k] = -(beta - alpha);
            ry[k] = -2.0 * std::atan2(mb, ma);
            next[k] = std::polar(r, (alpha + beta) / 2);
        }
        std::vector<std::uint32_t> controls;
        for (std::uint32_t c = q + 1; c < n; ++c) {
            controls.push_back(c);
        }
        append_multiplexed_rotation(disentangle, GateKind::RZ, q, controls, rz);
        append_multiplexed_rotation(disentangle, GateKind::RY, q, controls, ry);
        v = std::move(next);
    }

    // The disentangler maps target to exp(i * arg(v[0])) |0...0>.
    StatePrep out{invert_circuit(disentangle), -std::arg(v[0])};
    out.circuit.set_name("state_prep");
    return out;
}

Circuit synthesize_state_prep(const StateVector &target) {
    return synthesize_state_prep_with_phase(target).circuit;
}

}  // namespace qut
