#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace speck {

enum class PhaseRole { serial, parallel };

std::string_view to_string(PhaseRole role);
PhaseRole phase_role_from_string(std::string_view text); // throws std::domain_error

struct PhaseEntry {
    std::string label;
    PhaseRole role = PhaseRole::serial;
    std::int64_t elapsed_ns = 0;
};

/// Ordered wall-clock accounting per labeled phase of one algorithm run.
/// Repeated adds under one label accumulate; entry order is first-seen.
struct PhaseTimings {
    std::vector<PhaseEntry> entries;

    void add(std::string_view label, PhaseRole role, std::int64_t elapsed_ns);
    void merge(const PhaseTimings& other);
    std::int64_t total_ns() const;
    std::int64_t total_ns(PhaseRole role) const;
    const PhaseEntry* find(std::string_view label) const;
    std::vector<std::string> labels() const;
};

/// Accumulates timed sections into a PhaseTimings sink.
class PhaseClock {
public:
    explicit PhaseClock(PhaseTimings& sink) : sink_(&sink) {}

    template <typename F>
    void run(std::string_view label, PhaseRole role, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        sink_->add(label, role,
                   std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }

private:
    PhaseTimings* sink_;
};

} // namespace speck
