#include "fracspec/mittag_leffler.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fracspec {

namespace {

using big_float = boost::multiprecision::cpp_bin_float_50;

// 1/Gamma(x), zero at the poles of Gamma.
double rgamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 171.0) return 0.0;  // Gamma overflows; reciprocal underflows
    return 1.0 / std::tgamma(x);
}

double series_long_double(double mu, double nu, double z) {
    long double sum = 0.0L, zk = 1.0L;
    const long double zl = z;
    long double prev = 0.0L;
    for (int k = 0; k < 20000; ++k) {
        const long double arg = static_cast<long double>(mu) * k + static_cast<long double>(nu);
        long double term = 0.0L;
        if (arg > 1755.0L)
            term = 0.0L;  // Gamma overflows even in long double
        else
            term = zk / tgammal(arg);
        sum += term;
        zk *= zl;
        if (k > 2 && fabsl(term) < 1e-22L * (fabsl(sum) + 1e-30L) && fabsl(term) < fabsl(prev))
            break;
        prev = term;
    }
    return static_cast<double>(sum);
}

double series_big(double mu, double nu, double z) {
    big_float sum = 0, zk = 1;
    const big_float zb = z;
    for (int k = 0; k < 100000; ++k) {
        const big_float arg = big_float(mu) * k + big_float(nu);
        big_float term;
        if (arg <= 0 && arg == boost::multiprecision::floor(arg))
            term = 0;
        else
            term = zk / boost::math::tgamma(arg);
        sum += term;
        zk *= zb;
        if (k > 2 && boost::multiprecision::abs(term) <
                         big_float(1e-45) * (boost::multiprecision::abs(sum) + big_float(1e-60)) &&
            boost::multiprecision::abs(zk) < boost::math::tgamma(arg) )
            break;
    }
    return sum.convert_to<double>();
}

// Spectral (complete monotonicity) representation for 0 < mu < 1, z < 0,
// nu < 1 + mu. Exact, smooth, rapidly decaying integrand.
double integral_repr(double mu, double nu, double z) {
    const double pi = 3.14159265358979323846;
    const double s1 = std::sin(pi * (1.0 - nu));
    const double s2 = std::sin(pi * (1.0 - nu + mu));
    const double c = std::cos(pi * mu);
    auto kernel = [&](double r) {
        const double den = r * r - 2.0 * r * z * c + z * z;
        const double pow_term = (nu == 1.0) ? 1.0 : std::pow(r, (1.0 - nu) / mu);
        return (1.0 / (pi * mu)) * pow_term * std::exp(-std::pow(r, 1.0 / mu)) *
               (r * s1 - z * s2) / den;
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(kernel, 1e-14);
}

// Asymptotic algebraic tail -sum_m z^-m / Gamma(nu - mu m), truncated at
// the smallest term.
double asymptotic_algebraic(double mu, double nu, double z) {
    double sum = 0.0, prev_mag = std::numeric_limits<double>::infinity();
    const double zi = 1.0 / z;
    double zm = zi;
    for (int m = 1; m <= 200; ++m) {
        const double term = -zm * rgamma(nu - mu * m);
        const double mag = std::fabs(term);
        if (mag > prev_mag) break;  // semi-convergent: stop at smallest term
        sum += term;
        if (mag > 0.0) prev_mag = mag;
        zm *= zi;
        if (mag < 1e-18) break;
    }
    return sum;
}

// For 1 < mu < 2 on the far negative axis the pair of decaying oscillatory
// exponentials from the saddle points must be kept alongside the algebraic
// tail.
double asymptotic_with_exponentials(double mu, double nu, double z) {
    const double pi = 3.14159265358979323846;
    const std::complex<double> w =
        std::pow(std::complex<double>(-z, 0.0), 1.0 / mu) *
        std::exp(std::complex<double>(0.0, pi / mu));
    const std::complex<double> contrib =
        std::pow(w, 1.0 - nu) * std::exp(w) / mu;
    return 2.0 * contrib.real() + asymptotic_algebraic(mu, nu, z);
}

}  // namespace

double mittag_leffler(double mu, double nu, double z) {
    if (!(mu > 0.0 && mu <= 2.0)) throw std::domain_error("mittag_leffler: mu must be in (0, 2]");
    if (!(nu > 0.0)) throw std::domain_error("mittag_leffler: nu must be > 0");
    if (!std::isfinite(z)) throw std::domain_error("mittag_leffler: z must be finite");

    // Exact reductions at the classical orders.
    if (mu == 1.0) {
        if (nu == 1.0) return std::exp(z);
        if (nu == 2.0) return (z == 0.0) ? 1.0 : std::expm1(z) / z;
    }
    if (mu == 2.0) {
        const double r = std::sqrt(std::fabs(z));
        if (nu == 1.0) return (z >= 0.0) ? std::cosh(r) : std::cos(r);
        if (nu == 2.0) {
            if (z == 0.0) return 1.0;
            return (z > 0.0) ? std::sinh(r) / r : std::sin(r) / r;
        }
    }

    const double az = std::fabs(z);
    if (az == 0.0) return rgamma(nu);

    // Cancellation in the alternating series scales like exp(|z|^(1/mu));
    // keep the series only where long double absorbs it.
    const double cancel = std::pow(az, 1.0 / mu);

    if (z > 0.0) {
        if (cancel < 600.0) return series_long_double(mu, nu, z);
        throw std::domain_error("mittag_leffler: large positive z overflows");
    }

    if (mu < 1.0) {
        if (cancel <= 17.0) return series_long_double(mu, nu, z);
        // Reduce nu below 1 + mu so the spectral representation applies:
        // E_{mu,nu}(z) = (E_{mu,nu-mu}(z) - 1/Gamma(nu-mu)) / z.
        if (nu >= 1.0 + mu)
            return (mittag_leffler(mu, nu - mu, z) - rgamma(nu - mu)) / z;
        return integral_repr(mu, nu, z);
    }

    // 1 <= mu <= 2 non-classical: multiprecision series up to the point
    // where 50 digits stop covering the cancellation, then asymptotics.
    if (cancel <= 85.0) {
        if (cancel <= 17.0) return series_long_double(mu, nu, z);
        return series_big(mu, nu, z);
    }
    if (mu == 1.0) throw std::domain_error("mittag_leffler: unsupported (mu=1, large |z|, general nu)");
    return asymptotic_with_exponentials(mu, nu, z);
}

double mittag_leffler(double mu, double z) { return mittag_leffler(mu, 1.0, z); }

}  // namespace fracspec
