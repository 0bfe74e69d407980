#include "speck/timing.hpp"

#include <stdexcept>

namespace speck {

std::string_view to_string(PhaseRole role) {
    return role == PhaseRole::serial ? "serial" : "parallel";
}

PhaseRole phase_role_from_string(std::string_view text) {
    if (text == "serial") return PhaseRole::serial;
    if (text == "parallel") return PhaseRole::parallel;
    throw std::domain_error("unknown phase role: " + std::string(text));
}

void PhaseTimings::add(std::string_view label, PhaseRole role, std::int64_t elapsed_ns) {
    if (elapsed_ns < 0) {
        throw std::domain_error("phase elapsed time must be >= 0");
    }
    for (auto& entry : entries) {
        if (entry.label == label) {
            if (entry.role != role) {
                throw std::logic_error("phase '" + entry.label +
                                       "' re-added with a different role");
            }
            entry.elapsed_ns += elapsed_ns;
            return;
        }
    }
    entries.push_back({std::string(label), role, elapsed_ns});
}

void PhaseTimings::merge(const PhaseTimings& other) {
    for (const auto& entry : other.entries) {
        add(entry.label, entry.role, entry.elapsed_ns);
    }
}

std::int64_t PhaseTimings::total_ns() const {
    std::int64_t total = 0;
    for (const auto& entry : entries) total += entry.elapsed_ns;
    return total;
}

std::int64_t PhaseTimings::total_ns(PhaseRole role) const {
    std::int64_t total = 0;
    for (const auto& entry : entries) {
        if (entry.role == role) total += entry.elapsed_ns;
    }
    return total;
}

const PhaseEntry* PhaseTimings::find(std::string_view label) const {
    for (const auto& entry : entries) {
        if (entry.label == label) return &entry;
    }
    return nullptr;
}

std::vector<std::string> PhaseTimings::labels() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& entry : entries) out.push_back(entry.label);
    return out;
}

} // namespace speck
