#include "speck/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "speck/errors.hpp"
#include "speck/model.hpp"
#include "speck/stages.hpp"

namespace speck {

namespace {

void validate_stages(const Decomposition& d) {
    if (d.stages.empty()) {
        throw std::domain_error("decomposition '" + d.name + "' has no stages");
    }
    for (const auto& stage : d.stages) {
        if (!(stage.weight > 0.0)) {
            throw std::domain_error("stage '" + stage.label +
                                    "' must have a positive weight");
        }
        if (!(stage.parallel_fraction >= 0.0 && stage.parallel_fraction <= 1.0)) {
            throw std::domain_error("stage '" + stage.label +
                                    "' parallel fraction must lie in [0, 1]");
        }
    }
}

Decomposition from_table(std::string name, std::span<const stages::StageSpec> table) {
    Decomposition d;
    d.name = std::move(name);
    d.stages.reserve(table.size());
    for (const auto& row : table) {
        d.stages.push_back({row.label, row.weight, row.parallel_fraction});
    }
    return d;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

double parse_number(std::string_view text, int line, const char* what) {
    const std::string buf(text);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(buf, &consumed);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("expected a number for ") + what +
                                    ", got '" + buf + "'");
    }
    if (consumed != buf.size()) {
        throw parse_error(line, std::string("trailing characters after ") + what +
                                    " in '" + buf + "'");
    }
    return value;
}

} // namespace

double serial_fraction(const Decomposition& d) {
    validate_stages(d);
    double total = 0.0;
    double serial = 0.0;
    for (const auto& stage : d.stages) {
        total += stage.weight;
        serial += stage.weight * (1.0 - stage.parallel_fraction);
    }
    const double f = serial / total;
    return std::clamp(f, 0.0, 1.0);
}

double max_k_of(const Decomposition& d, int processors) {
    return max_k(serial_fraction(d), processors);
}

const std::vector<Decomposition>& builtin_catalog() {
    static const std::vector<Decomposition> catalog = {
        from_table("apriori", stages::apriori),
        from_table("knn", stages::knn),
        from_table("cdf97", stages::cdf97),
        from_table("fft", stages::fft),
        from_table("nbc", stages::nbc),
    };
    return catalog;
}

const Decomposition& builtin_decomposition(std::string_view name) {
    for (const auto& d : builtin_catalog()) {
        if (d.name == name) return d;
    }
    throw std::domain_error("unknown builtin decomposition: " + std::string(name));
}

std::vector<RankEntry> rank_by_max_k(const std::vector<Decomposition>& catalog,
                                     int processors) {
    if (catalog.empty()) {
        throw std::domain_error("rank_by_max_k requires a non-empty catalog");
    }
    std::vector<RankEntry> ranked;
    ranked.reserve(catalog.size());
    for (const auto& d : catalog) {
        const double f = serial_fraction(d);
        ranked.push_back({d.name, f, max_k(f, processors)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RankEntry& a, const RankEntry& b) {
                         if (a.k_max != b.k_max) return a.k_max > b.k_max;
                         return a.name < b.name;
                     });
    return ranked;
}

Decomposition parse_decomposition(std::istream& in) {
    Decomposition d;
    std::string raw;
    int line_no = 0;
    bool have_name = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (!have_name) {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "name") {
                throw parse_error(line_no, "expected 'name = <identifier>' first");
            }
            const auto name = trim(line.substr(eq + 1));
            if (name.empty()) {
                throw parse_error(line_no, "decomposition name must not be empty");
            }
            d.name.assign(name);
            have_name = true;
            continue;
        }

        const auto bar1 = line.find('|');
        const auto bar2 = bar1 == std::string_view::npos
                              ? std::string_view::npos
                              : line.find('|', bar1 + 1);
        if (bar1 == std::string_view::npos || bar2 == std::string_view::npos ||
            line.find('|', bar2 + 1) != std::string_view::npos) {
            throw parse_error(line_no,
                              "expected '<label> | <weight> | <parallel_fraction>'");
        }
        Stage stage;
        stage.label.assign(trim(line.substr(0, bar1)));
        if (stage.label.empty()) {
            throw parse_error(line_no, "stage label must not be empty");
        }
        stage.weight =
            parse_number(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)), line_no, "weight");
        stage.parallel_fraction =
            parse_number(trim(line.substr(bar2 + 1)), line_no, "parallel_fraction");
        if (!(stage.weight > 0.0)) {
            throw parse_error(line_no, "weight must be > 0");
        }
        if (!(stage.parallel_fraction >= 0.0 && stage.parallel_fraction <= 1.0)) {
            throw parse_error(line_no, "parallel_fraction must lie in [0, 1]");
        }
        d.stages.push_back(std::move(stage));
    }
    if (!have_name) {
        throw parse_error(line_no + 1, "missing 'name = <identifier>' line");
    }
    if (d.stages.empty()) {
        throw parse_error(line_no + 1, "decomposition has no stages");
    }
    return d;
}

Decomposition load_decomposition(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open decomposition file: " + path.string());
    }
    return parse_decomposition(in);
}

std::string format_decomposition(const Decomposition& d) {
    validate_stages(d);
    std::ostringstream out;
    out.precision(17);
    out << "name = " << d.name << "\n";
    for (const auto& stage : d.stages) {
        out << stage.label << " | " << stage.weight << " | " << stage.parallel_fraction
            << "\n";
    }
    return out.str();
}

void save_decomposition(const Decomposition& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write decomposition file: " + path.string());
    }
    out << format_decomposition(d);
    if (!out) {
        throw io_error("failed while writing: " + path.string());
    }
}

} // namespace speck
