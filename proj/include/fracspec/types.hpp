#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracspec {

// Uniformly sampled real-valued signal. `dt` is the sample spacing in
// seconds; sample i lives at t = i*dt.
struct TimeSeries {
    double dt = 1.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double sample_rate() const { return 1.0 / dt; }

    double mean() const {
        if (values.empty()) return 0.0;
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }

    double variance() const {
        if (values.size() < 2) return 0.0;
        const double m = mean();
        double s = 0.0;
        for (double v : values) s += (v - m) * (v - m);
        return s / static_cast<double>(values.size());
    }

    // First differences; length shrinks by one.
    TimeSeries diff() const {
        if (values.size() < 2)
            throw std::invalid_argument("TimeSeries::diff: need at least 2 samples");
        TimeSeries out;
        out.dt = dt;
        out.values.resize(values.size() - 1);
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            out.values[i] = values[i + 1] - values[i];
        return out;
    }
};

// Least-squares line fit y = a + b*x. Returns slope, intercept and the
// standard error of the slope.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw std::invalid_argument("fit_line: need two equally sized vectors, n >= 2");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_line: degenerate abscissa");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (n > 2) {
        double ss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - (f.intercept + f.slope * x[i]);
            ss += r * r;
        }
        f.slope_stderr = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
    }
    return f;
}

}  // namespace fracspec
