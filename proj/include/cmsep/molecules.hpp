#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cmsep/eigensolver.hpp"
#include "cmsep/errors.hpp"
#include "cmsep/variational.hpp"

// The molecular dataset and the toy-model sweep behind the three figures.
//
// Each record pairs two published nonadiabatic ground-state energies for a
// hydrogen isotopologue: w_reference from a calculation in translation-free
// internal coordinates, and w_test from an SCF-style calculation over
// lab-frame particle coordinates, which cannot shed the center-of-mass
// motion and lands strictly higher. delta_w = w_test - w_reference is the
// spurious CM contribution; it shrinks as the molecule gets heavier, roughly
// like 1/mass_number.

namespace cmsep {

struct IsotopologueRecord {
    std::string name;
    double w_reference = 0.0;               // hartree
    double w_test = 0.0;                    // hartree
    std::optional<double> w_reference2;     // secondary published reference
    int mass_number = 0;                    // summed nucleon count
};

inline double delta_w(const IsotopologueRecord& rec) {
    return rec.w_test - rec.w_reference;
}

// Delimited table format: header row required, then one record per line as
//   name,w_reference,w_test,mass_number[,w_reference2]
// Decimal points only, comma separators, optional surrounding blanks.
inline constexpr std::string_view builtin_table_text =
    "name,w_reference,w_test,mass_number,w_reference2\n"
    "H2,-1.1640250232,-1.052371,2,\n"
    "HD,-1.1654718927,-1.063356,3,-1.1654555\n"
    "HT,-1.1660020061,-1.068382,4,\n"
    "D2,-1.1671688033,-1.074137,4,\n"
    "DT,-1.1678196334,-1.079279,5,\n"
    "T2,-1.1685356688,-1.084123,6,\n";

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline double parse_double(std::string_view field, const char* what,
                           std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error(std::string(what) + " is not a number: '" +
                              std::string(field) + "'",
                          line);
    return value;
}

inline int parse_int(std::string_view field, const char* what,
                     std::size_t line) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error(std::string(what) + " is not an integer: '" +
                              std::string(field) + "'",
                          line);
    return value;
}

} // namespace detail

inline std::vector<IsotopologueRecord> parse_table(std::istream& in) {
    std::vector<IsotopologueRecord> records;
    std::string raw;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        const auto fields = detail::split_fields(line);
        if (!seen_header) {
            if (fields.empty() || fields[0] != "name")
                throw parse_error("expected a header row starting with 'name'",
                                  lineno);
            seen_header = true;
            continue;
        }
        if (fields.size() != 4 && fields.size() != 5)
            throw parse_error("expected 4 or 5 fields, got " +
                                  std::to_string(fields.size()),
                              lineno);
        IsotopologueRecord rec;
        rec.name = std::string(fields[0]);
        if (rec.name.empty())
            throw parse_error("empty molecule name", lineno);
        rec.w_reference = detail::parse_double(fields[1], "w_reference", lineno);
        rec.w_test = detail::parse_double(fields[2], "w_test", lineno);
        rec.mass_number = detail::parse_int(fields[3], "mass_number", lineno);
        if (fields.size() == 5 && !fields[4].empty())
            rec.w_reference2 =
                detail::parse_double(fields[4], "w_reference2", lineno);
        if (rec.mass_number < 2)
            throw parse_error("mass_number must be >= 2", lineno);
        if (!(rec.w_test > rec.w_reference))
            throw parse_error("w_test must exceed w_reference", lineno);
        records.push_back(std::move(rec));
    }
    if (!seen_header)
        throw parse_error("empty table: header row required", 1);
    return records;
}

inline std::vector<IsotopologueRecord> parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_table(in);
}

inline const std::vector<IsotopologueRecord>& builtin_table() {
    static const std::vector<IsotopologueRecord> table =
        parse_table(builtin_table_text);
    return table;
}

// Toy-model counterpart of delta_w: the exact CM contamination of the
// lab-frame Gaussian optimum.
inline double toy_delta_w(double beta) {
    require_beta(beta);
    return minimize_lab(beta).energy - minimize_rel(beta).energy;
}

struct SweepRow {
    double beta = 0.0;
    double w_rel = 0.0;
    double w_lab = 0.0;
    double e0 = 0.0;            // eigensolver ground state
    double delta_w = 0.0;       // w_lab - w_rel
    double beta_fraction = 0.0; // beta / (1 + beta)
};

inline std::vector<SweepRow> sweep_figures(const std::vector<double>& beta_grid,
                                           double tol = 1e-9) {
    if (beta_grid.empty())
        throw std::domain_error("beta grid must not be empty");
    for (double b : beta_grid)
        if (!(b > 0.0 && b <= 1.0))
            throw std::domain_error("beta grid values must lie in (0, 1]");
    std::vector<SweepRow> rows;
    rows.reserve(beta_grid.size());
    for (double b : beta_grid) {
        const auto rel = minimize_rel(b);
        const auto lab = minimize_lab(b);
        const auto exact = ground_state_energy(b, tol);
        rows.push_back({b, rel.energy, lab.energy, exact.energy,
                        lab.energy - rel.energy, b / (1.0 + b)});
    }
    return rows;
}

// n uniform points in (0.02, 1.0], last point exactly 1.
inline std::vector<double> default_beta_grid(int n = 50) {
    if (n < 1) throw std::domain_error("grid size must be >= 1");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = std::min(0.02 + 0.98 * static_cast<double>(i + 1) / n, 1.0);
    return grid;
}

// n points spanning [lo, hi] inclusive.
inline std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2) throw std::domain_error("uniform grid needs >= 2 points");
    if (!(hi > lo)) throw std::domain_error("grid bounds must be increasing");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return grid;
}

} // namespace cmsep
