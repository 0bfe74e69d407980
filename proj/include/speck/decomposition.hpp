#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace speck {

/// One step of an algorithm: a relative computational volume and the share
/// of that volume that can be spread across workers.
struct Stage {
    std::string label;
    double weight = 1.0;
    double parallel_fraction = 0.0;
};

/// A named, ordered list of stages.  Yields the serial fraction f.
struct Decomposition {
    std::string name;
    std::vector<Stage> stages;
};

/// f = sum_i w_i (1 - p_i) / sum_i w_i, in [0, 1].
/// Throws std::domain_error on an empty stage list, non-positive weight or a
/// parallel fraction outside [0, 1].
double serial_fraction(const Decomposition& d);

/// max_k(serial_fraction(d), P); unbounded_limit_error when f = 0.
double max_k_of(const Decomposition& d, int processors = 2);

/// The five decompositions shipped with the toolkit, in presentation order:
/// apriori, knn, cdf97, fft, nbc.
const std::vector<Decomposition>& builtin_catalog();

/// Catalog lookup by name; throws std::domain_error for unknown names.
const Decomposition& builtin_decomposition(std::string_view name);

struct RankEntry {
    std::string name;
    double f = 0.0;
    double k_max = 1.0;
};

/// Descending by max(k); ties broken by ascending name.
std::vector<RankEntry> rank_by_max_k(const std::vector<Decomposition>& catalog,
                                     int processors = 2);

/// Decomposition file format (UTF-8 text):
///   name = <identifier>
///   <label> | <weight> | <parallel_fraction>
/// `#` starts a comment; blank lines are ignored.  Parse failures throw
/// parse_error with the 1-based line number.
Decomposition parse_decomposition(std::istream& in);
Decomposition load_decomposition(const std::filesystem::path& path);
std::string format_decomposition(const Decomposition& d);
void save_decomposition(const Decomposition& d, const std::filesystem::path& path);

} // namespace speck
