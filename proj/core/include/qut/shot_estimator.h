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


#ifndef QUT_SHOT_ESTIMATOR_H
#define QUT_SHOT_ESTIMATOR_H

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "qut/circuit.h"
#include "qut/density_matrix.h"
#include "qut/test_circuits.h"

namespace qut {

enum class EstimateMethod : std::uint8_t { ClosedForm, NumericMinimization };

struct ShotEstimate {
    std::uint64_t shots = 1;
    double sigma11 = 0.0;
    double p_e = 0.05;
    EstimateMethod method = EstimateMethod::ClosedForm;
};

/// The two states cannot be told apart; no finite shot count exists.
class EquivalentStates : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Overlaps at or above this are treated as equivalent states.
inline constexpr double kEquivalenceThreshold = 1.0 - 1e-15;

struct ChernoffResult {
    double exponent = 0.0;
    double argmin_s = 0.0;
    double min_trace = 1.0;
};

/// Minimizes Tr(rho^s sigma^(1-s)) over s in [0, 1] with a 101-point grid
/// followed by golden-section refinement to 1e-6.
ChernoffResult chernoff_minimize(const DensityMatrix &rho, const DensityMatrix &sigma);

/// -ln min_s Tr(rho^s sigma^(1-s)).
double qcb_exponent(const DensityMatrix &rho, const DensityMatrix &sigma);

/// max(ceil(ln p_e / ln sigma11), 1); 1 when sigma11 = 0.
ShotEstimate estimate_shots(double fidelity_to_zero, double p_e);

/// Estimate for the inverse harness of W then U against the expected state.
ShotEstimate estimate_shots_for_pair(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                                     double p_e);
/// Mutant as the program, the original as the expected preparation, empty W.
ShotEstimate estimate_shots_for_pair(const Circuit &original, const Circuit &mutant, double p_e);

struct ShotCurvePoint {
    double sigma11;
    double p_e;
    std::uint64_t shots;
};

/// Tabulates estimate_shots over the product of the two ranges, sigma11 major.
std::vector<ShotCurvePoint> shot_curve(std::span<const double> sigma11_values, std::span<const double> p_e_values);

/// `count` evenly spaced values from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

/// CSV with header "sigma11,p_e,shots".
void write_shot_curve_csv(std::ostream &out, std::span<const ShotCurvePoint> points);

}  // namespace qut

#endif
