#pragma once

#include <span>
#include <vector>

namespace speck {

/// Inputs of the speedup calculus: the serial fraction f of a program, the
/// processor count P of the baseline system and the processor increment dP
/// added by specialization.
struct SpeedupParams {
    double f = 0.0;
    int processors = 1;
    long long increment = 0;

    /// Throws std::domain_error unless 0 <= f <= 1, P >= 1 and dP >= 0.
    void validate() const;
};

/// Classic Amdahl speedup S = 1 / (f + (1 - f)/P).
double amdahl_speedup(double f, int processors);

/// Speedup of the system grown by `increment` processors:
/// S' = 1 / (f + (1 - f)/(P + dP)).
double specialized_speedup(double f, int processors, long long increment);

/// k = S'/S = (f + (1 - f)/P) / (f + (1 - f)/(P + dP)).
/// Equals 1 when increment = 0 or f = 1 and is > 1 otherwise.
double coefficient_k(double f, int processors, long long increment);

/// Limit of k as dP -> infinity: (f (P - 1) + 1) / (P f).
/// At P = 2 this is (f + 1) / (2 f).
/// Throws unbounded_limit_error for f = 0, where the limit diverges.
double max_k(double f, int processors = 2);

/// Inverse of max_k in f: the unique f in (0, 1] with max_k(f, P) = kmax,
/// i.e. f = 1 / (P (kmax - 1) + 1).  Requires a finite kmax >= 1 and P >= 2.
double f_from_max_k(double kmax, int processors = 2);

struct CurvePoint {
    long long increment = 0;
    double speedup = 1.0; // S'
    double k = 1.0;       // S'/S
};

/// Tabulates S' and k for every increment, preserving the given order.
std::vector<CurvePoint> speedup_curve(double f, int processors,
                                      std::span<const long long> increments);

} // namespace speck
