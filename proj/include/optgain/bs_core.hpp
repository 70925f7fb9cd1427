#pragma once

namespace optgain {

/// Market model constants: initial stock price, risk-free rate, volatility,
/// time to expiration (years) and the initial bond price (informational, the
/// payoff formulas never use it).
struct MarketParams {
    double spot;
    double rate;
    double volatility;
    double maturity;
    double bond_initial;

    MarketParams(double spot, double rate, double volatility, double maturity,
                 double bond_initial = 1.0);
};

struct DTerms {
    double d_plus;
    double d_minus;  // d_plus - volatility * sqrt(maturity)
};

/// Standard normal CDF, absolute error below 1e-12 everywhere.
double norm_cdf(double x);

/// Standard normal density.
double norm_pdf(double x);

DTerms d_terms(const MarketParams& m, double strike);

double call_price(const MarketParams& m, double strike);
double put_price(const MarketParams& m, double strike);

/// dC/dS = Phi(d_plus), in (0, 1).
double call_delta(const MarketParams& m, double strike);

/// dP/dS = Phi(d_plus) - 1 = call_delta - 1, in (-1, 0).
double put_delta(const MarketParams& m, double strike);

/// Second spot derivative of the option price; identical for put and call
/// because they differ by a term affine in the spot.
double price_convexity(const MarketParams& m, double strike);

}  // namespace optgain
