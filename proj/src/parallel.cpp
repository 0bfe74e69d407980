#include "speck/parallel.hpp"

#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace speck {

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t, std::size_t, int)>& fn) {
    if (workers < 1) {
        throw std::domain_error("parallel_for: workers must be >= 1");
    }
    if (workers == 1) {
        fn(0, n, 0);
        return;
    }

    const auto lanes = static_cast<std::size_t>(workers);
    auto chunk_begin = [n, lanes](std::size_t lane) { return n * lane / lanes; };

    std::vector<std::exception_ptr> errors(lanes);
    std::vector<std::thread> threads;
    threads.reserve(lanes - 1);
    for (std::size_t lane = 1; lane < lanes; ++lane) {
        threads.emplace_back([&, lane] {
            try {
                fn(chunk_begin(lane), chunk_begin(lane + 1), static_cast<int>(lane));
            } catch (...) {
                errors[lane] = std::current_exception();
            }
        });
    }
    try {
        fn(0, chunk_begin(1), 0);
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : threads) t.join();

    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace speck
