#include "optgain/bs_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace optgain {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

}  // namespace

MarketParams::MarketParams(double spot_, double rate_, double volatility_,
                           double maturity_, double bond_initial_)
    : spot(spot_),
      rate(rate_),
      volatility(volatility_),
      maturity(maturity_),
      bond_initial(bond_initial_) {
    require(std::isfinite(spot) && spot > 0.0, "spot must be > 0");
    require(std::isfinite(rate) && rate >= 0.0, "rate must be >= 0");
    require(std::isfinite(volatility) && volatility > 0.0, "volatility must be > 0");
    require(std::isfinite(maturity) && maturity > 0.0, "maturity must be > 0");
    require(std::isfinite(bond_initial) && bond_initial > 0.0, "bond_initial must be > 0");
}

double norm_cdf(double x) {
    require(std::isfinite(x), "norm_cdf: input must be finite");
    // erfc keeps full absolute accuracy in both tails, unlike 0.5*(1+erf).
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double norm_pdf(double x) {
    require(std::isfinite(x), "norm_pdf: input must be finite");
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

DTerms d_terms(const MarketParams& m, double strike) {
    require(std::isfinite(strike) && strike > 0.0, "strike must be > 0");
    const double vol_sqrt_t = m.volatility * std::sqrt(m.maturity);
    const double d_plus =
        (std::log(m.spot / strike) +
         m.maturity * (m.rate + 0.5 * m.volatility * m.volatility)) /
        vol_sqrt_t;
    return {d_plus, d_plus - vol_sqrt_t};
}

double call_price(const MarketParams& m, double strike) {
    const DTerms d = d_terms(m, strike);
    return m.spot * norm_cdf(d.d_plus) -
           strike * std::exp(-m.rate * m.maturity) * norm_cdf(d.d_minus);
}

double put_price(const MarketParams& m, double strike) {
    // Equal to call_price - spot + strike*exp(-rT); this form stays
    // nonnegative for far out-of-the-money puts where the parity route
    // cancels catastrophically.
    const DTerms d = d_terms(m, strike);
    return strike * std::exp(-m.rate * m.maturity) * norm_cdf(-d.d_minus) -
           m.spot * norm_cdf(-d.d_plus);
}

double call_delta(const MarketParams& m, double strike) {
    return norm_cdf(d_terms(m, strike).d_plus);
}

double put_delta(const MarketParams& m, double strike) {
    return call_delta(m, strike) - 1.0;
}

double price_convexity(const MarketParams& m, double strike) {
    return norm_pdf(d_terms(m, strike).d_plus) /
           (m.spot * m.volatility * std::sqrt(m.maturity));
}

}  // namespace optgain
