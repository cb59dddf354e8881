#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "propcal/errors.hpp"

namespace propcal {

// Numerically stable logistic function, 1 / (1 + exp(-z)).
inline double expit(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Inverse of expit; p must lie strictly inside (0, 1).
inline double logit(double p) {
    return std::log(p) - std::log1p(-p);
}

inline double mean(const std::vector<double>& v) {
    if (v.empty()) throw ShapeError("mean: empty vector");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double mean(const std::vector<int>& v) {
    if (v.empty()) throw ShapeError("mean: empty vector");
    double s = 0.0;
    for (int x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Linear-interpolation quantile (R type 7) of an already sorted vector.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw ShapeError("quantile_sorted: empty vector");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    return quantile_sorted(v, p);
}

// Mean negative Bernoulli log-likelihood of probabilities against 0/1 labels.
inline double log_loss(const std::vector<double>& probs, const std::vector<int>& labels) {
    if (probs.size() != labels.size() || probs.empty())
        throw ShapeError("log_loss: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = std::clamp(probs[i], 1e-15, 1.0 - 1e-15);
        s += labels[i] == 1 ? -std::log(p) : -std::log1p(-p);
    }
    return s / static_cast<double>(probs.size());
}

inline double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

}  // namespace propcal
