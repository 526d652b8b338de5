#pragma once

#include <cmath>

namespace fracsplit {

// Gamma(a)/Gamma(b) for positive real arguments, evaluated in log space so
// large arguments never overflow an intermediate.
inline double gamma_ratio(double a, double b) {
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

inline double log_factorial(long long k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// Neumaier compensated accumulator.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace fracsplit
