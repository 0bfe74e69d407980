#include "speck/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "speck/errors.hpp"

namespace speck {

namespace {

void check_fraction(double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::domain_error("serial fraction f must lie in [0, 1], got " +
                                std::to_string(f));
    }
}

void check_processors(int processors) {
    if (processors < 1) {
        throw std::domain_error("processor count must be >= 1, got " +
                                std::to_string(processors));
    }
}

void check_increment(long long increment) {
    if (increment < 0) {
        throw std::domain_error("processor increment must be >= 0, got " +
                                std::to_string(increment));
    }
}

} // namespace

void SpeedupParams::validate() const {
    check_fraction(f);
    check_processors(processors);
    check_increment(increment);
}

double amdahl_speedup(double f, int processors) {
    check_fraction(f);
    check_processors(processors);
    if (f == 1.0) return 1.0;
    if (f == 0.0) return static_cast<double>(processors);
    return 1.0 / (f + (1.0 - f) / processors);
}

double specialized_speedup(double f, int processors, long long increment) {
    check_fraction(f);
    check_processors(processors);
    check_increment(increment);
    const double total = static_cast<double>(processors) + static_cast<double>(increment);
    if (f == 1.0) return 1.0;
    if (f == 0.0) return total;
    return 1.0 / (f + (1.0 - f) / total);
}

double coefficient_k(double f, int processors, long long increment) {
    check_fraction(f);
    check_processors(processors);
    check_increment(increment);
    if (f == 1.0 || increment == 0) return 1.0;
    const double total = static_cast<double>(processors) + static_cast<double>(increment);
    if (f == 0.0) return total / processors;
    // Ratio of the two Amdahl denominators; avoids the double reciprocal.
    return (f + (1.0 - f) / processors) / (f + (1.0 - f) / total);
}

double max_k(double f, int processors) {
    check_fraction(f);
    check_processors(processors);
    if (f == 0.0) {
        throw unbounded_limit_error("max(k) unbounded for f=0");
    }
    return (f * (processors - 1) + 1.0) / (processors * f);
}

double f_from_max_k(double kmax, int processors) {
    if (processors < 2) {
        throw std::domain_error("f_from_max_k requires P >= 2, got " +
                                std::to_string(processors));
    }
    if (!std::isfinite(kmax)) {
        throw std::domain_error("kmax must be finite");
    }
    // kmax = 1 corresponds to the fully serial edge f = 1; anything below
    // has no preimage.
    if (kmax < 1.0) {
        throw std::domain_error("kmax must be >= 1, got " + std::to_string(kmax));
    }
    return 1.0 / (processors * (kmax - 1.0) + 1.0);
}

std::vector<CurvePoint> speedup_curve(double f, int processors,
                                      std::span<const long long> increments) {
    if (increments.empty()) {
        throw std::domain_error("speedup_curve requires at least one increment");
    }
    std::vector<CurvePoint> curve;
    curve.reserve(increments.size());
    for (long long dp : increments) {
        curve.push_back({dp, specialized_speedup(f, processors, dp),
                         coefficient_k(f, processors, dp)});
    }
    return curve;
}

} // namespace speck
