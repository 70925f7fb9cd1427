#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "optgain/strategy.hpp"

namespace optgain {

/// One row of a gain tabulation: drift a, expected terminal wealth
/// h(a) = E_a X_T, the risk-free benchmark e^{rT} X_0, and their difference.
struct GainPoint {
    double drift;
    double expected_wealth;
    double riskfree_wealth;
    double average_gain;  // expected_wealth - riskfree_wealth
};

/// Strictly increasing, finite evaluation grid over the drift.
struct DriftGrid {
    std::vector<double> values;

    explicit DriftGrid(std::vector<double> values);
    static DriftGrid linspace(double lo, double hi, std::size_t count);
};

struct WeightedDrift {
    double drift;
    double probability;
};

struct ConvexityReport {
    double min_second_difference;
    double location;  // grid y at which the minimum occurs
};

/// h(a) = E_a X_T via the shifted-spot closed form
/// e^{rT} [mu_p p_BS(e^{(a-r)T} S_0, K_p) + mu_c c_BS(e^{(a-r)T} S_0, K_c)].
double expected_terminal_wealth(const StrategySpec& s, const MarketParams& m,
                                double drift);

/// E_a X_T - e^{rT} X_0. Zero at a = r; strictly positive elsewhere for
/// balanced strategies.
double average_gain(const StrategySpec& s, const MarketParams& m, double drift);

/// R(y) = h(r + ln(y)/T), the expected terminal wealth in the variable
/// y = e^{(a-r)T}. R(1) = e^{rT} X_0.
double r_function(const StrategySpec& s, const MarketParams& m, double y);

/// Closed-form dR/dy = e^{rT} S_0 [mu_p (Phi(d_p)-1) + mu_c Phi(d_c)] with the
/// d terms taken at spot y*S_0; vanishes at y = 1 for balanced strategies.
double r_derivative(const StrategySpec& s, const MarketParams& m, double y);

std::vector<GainPoint> gain_curve(const StrategySpec& s, const MarketParams& m,
                                  const DriftGrid& grid);

/// Central second differences of R over y_grid (strictly increasing,
/// at least 3 points); reports the minimum and where it occurs.
ConvexityReport verify_convexity(const StrategySpec& s, const MarketParams& m,
                                 const std::vector<double>& y_grid);

/// For a strategy violating the balanced proportion (by more than 1e-12
/// relative), a drift in [r-2, r+2] whose average gain is strictly negative;
/// nullopt for balanced strategies.
std::optional<double> find_negative_gain_witness(const StrategySpec& s,
                                                 const MarketParams& m);

/// Average gain under a random drift with the given discrete distribution
/// (probabilities nonnegative, summing to 1 within 1e-12).
double expected_gain_random_drift(const StrategySpec& s, const MarketParams& m,
                                  const std::vector<WeightedDrift>& drift_samples);

}  // namespace optgain
