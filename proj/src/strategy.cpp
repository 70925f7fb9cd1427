#include "optgain/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optgain {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

// Market seen from calendar time t: spot replaced, maturity shortened.
MarketParams market_at(const MarketParams& m, double spot, double time) {
    require(std::isfinite(time) && time >= 0.0 && time < m.maturity,
            "time must satisfy 0 <= time < maturity");
    return {spot, m.rate, m.volatility, m.maturity - time, m.bond_initial};
}

}  // namespace

StrategySpec::StrategySpec(double put_strike_, double put_quantity_,
                           double call_strike_, double call_quantity_)
    : put_strike(put_strike_),
      put_quantity(put_quantity_),
      call_strike(call_strike_),
      call_quantity(call_quantity_) {
    require(std::isfinite(put_strike) && put_strike > 0.0, "put_strike must be > 0");
    require(std::isfinite(call_strike) && call_strike > 0.0, "call_strike must be > 0");
    require(std::isfinite(put_quantity) && put_quantity >= 0.0,
            "put_quantity must be >= 0");
    require(std::isfinite(call_quantity) && call_quantity >= 0.0,
            "call_quantity must be >= 0");
    require(put_quantity + call_quantity > 0.0,
            "at least one of put_quantity, call_quantity must be > 0");
}

double theorem1_ratio(const MarketParams& m, double put_strike, double call_strike) {
    const double phi_put = norm_cdf(d_terms(m, put_strike).d_plus);
    const double phi_call = norm_cdf(d_terms(m, call_strike).d_plus);
    return (1.0 - phi_put) / phi_call;
}

StrategySpec make_balanced_strategy(const MarketParams& m, double put_strike,
                                    double call_strike) {
    return {put_strike, 1.0, call_strike, theorem1_ratio(m, put_strike, call_strike)};
}

double initial_wealth(const StrategySpec& s, const MarketParams& m) {
    return s.put_quantity * put_price(m, s.put_strike) +
           s.call_quantity * call_price(m, s.call_strike);
}

double terminal_payoff(const StrategySpec& s, double terminal_price) {
    require(std::isfinite(terminal_price) && terminal_price >= 0.0,
            "terminal_price must be >= 0");
    return s.put_quantity * std::max(s.put_strike - terminal_price, 0.0) +
           s.call_quantity * std::max(terminal_price - s.call_strike, 0.0);
}

double portfolio_value(const StrategySpec& s, double spot, double time,
                       const MarketParams& m) {
    return initial_wealth(s, market_at(m, spot, time));
}

double portfolio_delta(const StrategySpec& s, double spot, double time,
                       const MarketParams& m) {
    const MarketParams mt = market_at(m, spot, time);
    return s.put_quantity * put_delta(mt, s.put_strike) +
           s.call_quantity * call_delta(mt, s.call_strike);
}

PortfolioState portfolio_state(const StrategySpec& s, double spot, double time,
                               const MarketParams& m) {
    return {portfolio_value(s, spot, time, m), portfolio_delta(s, spot, time, m),
            spot, time};
}

}  // namespace optgain
