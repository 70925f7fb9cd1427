#pragma once

#include "optgain/bs_core.hpp"

namespace optgain {

/// Options portfolio bought at time 0: put_quantity puts struck at put_strike
/// plus call_quantity calls struck at call_strike, one common expiration.
/// Quantities are real-valued and nonnegative, at least one positive.
struct StrategySpec {
    double put_strike;
    double put_quantity;
    double call_strike;
    double call_quantity;

    StrategySpec(double put_strike, double put_quantity, double call_strike,
                 double call_quantity);
};

struct PortfolioState {
    double value;  // Q(x, t)
    double delta;  // dQ/dx
    double spot;
    double time;
};

/// The call-to-put quantity ratio (1 - Phi(d_p)) / Phi(d_c) that zeroes the
/// portfolio delta at inception and makes the average gain nonnegative for
/// every drift.
double theorem1_ratio(const MarketParams& m, double put_strike, double call_strike);

/// Balanced portfolio with unit put quantity.
StrategySpec make_balanced_strategy(const MarketParams& m, double put_strike,
                                    double call_strike);

/// X_0, the premium paid for the portfolio.
double initial_wealth(const StrategySpec& s, const MarketParams& m);

/// X_T = put_quantity*(K_p - S_T)^+ + call_quantity*(S_T - K_c)^+.
double terminal_payoff(const StrategySpec& s, double terminal_price);

/// Portfolio value Q(x, t) at spot x and calendar time t in [0, maturity).
double portfolio_value(const StrategySpec& s, double spot, double time,
                       const MarketParams& m);

/// dQ/dx at (x, t).
double portfolio_delta(const StrategySpec& s, double spot, double time,
                       const MarketParams& m);

PortfolioState portfolio_state(const StrategySpec& s, double spot, double time,
                               const MarketParams& m);

}  // namespace optgain
