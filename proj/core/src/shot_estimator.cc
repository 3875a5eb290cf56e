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


#include "qut/shot_estimator.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qut/simulator.h"

namespace qut {

namespace {

constexpr std::size_t kGridPoints = 101;
constexpr double kGoldenTolerance = 1e-6;

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

ChernoffResult chernoff_minimize(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("density matrices have different dimensions");
    }
    auto trace_at = [&](double s) {
        ComplexMatrix prod = fractional_power(rho, s) * fractional_power(sigma, 1.0 - s);
        return prod.trace().real();
    };

    std::size_t best = 0;
    std::array<double, kGridPoints> values{};
    for (std::size_t i = 0; i < kGridPoints; ++i) {
        values[i] = trace_at(static_cast<double>(i) / (kGridPoints - 1));
        if (values[i] < values[best]) {
            best = i;
        }
    }
    ChernoffResult result{0.0, static_cast<double>(best) / (kGridPoints - 1), values[best]};

    // Golden section over the bracketing grid cells.
    const double step = 1.0 / (kGridPoints - 1);
    double a = std::max(0.0, result.argmin_s - step);
    double b = std::min(1.0, result.argmin_s + step);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = trace_at(c);
    double fd = trace_at(d);
    while (b - a > kGoldenTolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = trace_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = trace_at(d);
        }
    }
    double s = (a + b) / 2.0;
    double fs = trace_at(s);
    if (fs < result.min_trace) {
        result.min_trace = fs;
        result.argmin_s = s;
    }
    result.min_trace = std::clamp(result.min_trace, 0.0, 1.0);
    result.exponent = result.min_trace > 0 ? -std::log(result.min_trace) : std::numeric_limits<double>::infinity();
    return result;
}

double qcb_exponent(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return chernoff_minimize(rho, sigma).exponent;
}

ShotEstimate estimate_shots(double fidelity_to_zero, double p_e) {
    if (!(fidelity_to_zero >= 0.0 && fidelity_to_zero <= 1.0)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    if (!(p_e > 0.0 && p_e < 1.0)) {
        throw std::invalid_argument("error probability must lie in (0, 1)");
    }
    if (fidelity_to_zero >= kEquivalenceThreshold) {
        throw EquivalentStates("states are equivalent; no finite shot estimate");
    }
    ShotEstimate est{1, fidelity_to_zero, p_e, EstimateMethod::ClosedForm};
    if (fidelity_to_zero > 0.0) {
        double n = std::ceil(std::log(p_e) / std::log(fidelity_to_zero));
        est.shots = n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
    }
    return est;
}

ShotEstimate estimate_shots_for_pair(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                                     double p_e) {
    StateVector sigma = run_statevector(build_inverse_harness(input, program, expected));
    double sigma11 = std::min(1.0, std::norm(sigma[0]));
    return estimate_shots(sigma11, p_e);
}

ShotEstimate estimate_shots_for_pair(const Circuit &original, const Circuit &mutant, double p_e) {
    return estimate_shots_for_pair(Circuit(mutant.num_qubits()), mutant, original, p_e);
}

std::vector<ShotCurvePoint> shot_curve(std::span<const double> sigma11_values, std::span<const double> p_e_values) {
    std::vector<ShotCurvePoint> out;
    out.reserve(sigma11_values.size() * p_e_values.size());
    for (double s : sigma11_values) {
        if (!(s > 0.0 && s < 1.0)) {
            throw std::invalid_argument("shot curve sigma11 values must lie in (0, 1)");
        }
        for (double p : p_e_values) {
            out.push_back({s, p, estimate_shots(s, p).shots});
        }
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return out;
}

void write_shot_curve_csv(std::ostream &out, std::span<const ShotCurvePoint> points) {
    out << "sigma11,p_e,shots\n";
    for (const auto &pt : points) {
        out << format_double(pt.sigma11) << ',' << format_double(pt.p_e) << ',' << pt.shots << '\n';
    }
}

}  // namespace qut
