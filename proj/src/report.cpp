#include "pod2/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pod2::report {

using nlohmann::json;

namespace {

json integer_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

BigInt integer_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
}

// Shortest text that parses back to the same double.
std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    // strtod rather than from_chars: the latter rejects subnormals
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return x;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

template <class Real>
ReportRecord make_record(const rademacher::ExactResult<Real>& result, const BigInt& oracle, double ms) {
    ReportRecord r;
    r.n = result.n;
    r.oracle = oracle;
    r.estimate = to_double(result.estimate);
    r.rounded = result.rounded;
    if constexpr (is_builtin_real_v<Real>) {
        r.diff = std::abs(r.estimate - oracle.template convert_to<double>());
    } else {
        r.diff = to_double(Real(abs(result.estimate - Real(oracle.str()))));
    }
    r.imag_residual = to_double(result.imag_residual);
    r.converged = result.converged;
    for (std::size_t f = 0; f < 4; ++f) {
        r.per_family[f] = {result.per_family[f].name, to_double(result.per_family[f].total.re)};
    }
    r.k_max = result.k_max;
    r.quad_tol = result.quad_tol;
    r.ms = ms;
    return r;
}

std::string to_json(const ReportRecord& r) {
    json families = json::array();
    for (const auto& f : r.per_family) families.push_back({{"family", f.family}, {"total", f.total}});
    const json j = {
        {"n", r.n},
        {"oracle", integer_to_json(r.oracle)},
        {"estimate", r.estimate},
        {"rounded", integer_to_json(r.rounded)},
        {"diff", r.diff},
        {"imag_residual", r.imag_residual},
        {"converged", r.converged},
        {"per_family", families},
        {"k_max", r.k_max},
        {"quad_tol", r.quad_tol},
        {"ms", r.ms},
    };
    return j.dump();
}

ReportRecord from_json(const std::string& line) {
    const json j = json::parse(line);
    ReportRecord r;
    r.n = j.at("n").get<std::int64_t>();
    r.oracle = integer_from_json(j.at("oracle"));
    r.estimate = j.at("estimate").get<double>();
    r.rounded = integer_from_json(j.at("rounded"));
    r.diff = j.at("diff").get<double>();
    r.imag_residual = j.at("imag_residual").get<double>();
    r.converged = j.at("converged").get<bool>();
    const json& fam = j.at("per_family");
    if (!fam.is_array() || fam.size() != 4) throw std::invalid_argument("per_family must hold 4 entries");
    for (std::size_t f = 0; f < 4; ++f) {
        r.per_family[f] = {fam[f].at("family").get<std::string>(), fam[f].at("total").get<double>()};
    }
    r.k_max = j.at("k_max").get<std::int64_t>();
    r.quad_tol = j.at("quad_tol").get<double>();
    r.ms = j.at("ms").get<double>();
    return r;
}

std::string csv_header() {
    std::string h = "n,oracle,estimate,rounded,diff,imag_residual,converged";
    for (const char* name : rademacher::family_names) h += std::string(",family_") + name;
    h += ",k_max,quad_tol,ms";
    return h;
}

std::string to_csv(const ReportRecord& r) {
    std::ostringstream os;
    os << r.n << ',' << r.oracle << ',' << format_double(r.estimate) << ',' << r.rounded << ','
       << format_double(r.diff) << ',' << format_double(r.imag_residual) << ',' << (r.converged ? "true" : "false");
    for (const auto& f : r.per_family) os << ',' << format_double(f.total);
    os << ',' << r.k_max << ',' << format_double(r.quad_tol) << ',' << format_double(r.ms);
    return os.str();
}

ReportRecord from_csv(const std::string& line) {
    const auto cells = split_csv(line);
    if (cells.size() != 14) throw std::invalid_argument("CSV record needs 14 fields, got " + std::to_string(cells.size()));
    ReportRecord r;
    r.n = std::stoll(cells[0]);
    r.oracle = BigInt(cells[1]);
    r.estimate = parse_double(cells[2]);
    r.rounded = BigInt(cells[3]);
    r.diff = parse_double(cells[4]);
    r.imag_residual = parse_double(cells[5]);
    if (cells[6] != "true" && cells[6] != "false") throw std::invalid_argument("bad converged flag '" + cells[6] + "'");
    r.converged = cells[6] == "true";
    for (std::size_t f = 0; f < 4; ++f) r.per_family[f] = {rademacher::family_names[f], parse_double(cells[7 + f])};
    r.k_max = std::stoll(cells[11]);
    r.quad_tol = parse_double(cells[12]);
    r.ms = parse_double(cells[13]);
    return r;
}

void write_human(std::ostream& os, const ReportRecord& r) {
    constexpr int width = 40;
    std::ostringstream line;
    line << "n=" << r.n << "  oracle=" << r.oracle << "  estimate=" << std::fixed << std::setprecision(6)
         << r.estimate << "  rounded=" << r.rounded << std::scientific << std::setprecision(2) << "  diff=" << r.diff
         << "  imag=" << r.imag_residual << "  converged=" << (r.converged ? "yes" : "no")
         << "  k_max=" << r.k_max;
    os << line.str() << '\n';
    double largest = 0;
    for (const auto& f : r.per_family) largest = std::max(largest, std::abs(f.total));
    for (const auto& f : r.per_family) {
        const int len = largest > 0 ? static_cast<int>(std::lround(width * std::abs(f.total) / largest)) : 0;
        std::ostringstream bar;
        bar << "  " << f.family << " |" << std::string(static_cast<std::size_t>(len), '#')
            << std::string(static_cast<std::size_t>(width - len), ' ') << "| " << std::showpos << std::fixed
            << std::setprecision(6) << f.total;
        os << bar.str() << '\n';
    }
}

template <class Real>
void write_contribution_table(std::ostream& os, const rademacher::ExactResult<Real>& result) {
    // k -> per family (re, im)
    std::map<std::int64_t, std::array<std::pair<double, double>, 4>> rows;
    for (std::size_t f = 0; f < 4; ++f) {
        const auto& fam = result.per_family[f];
        for (std::size_t i = 0; i < fam.k.size(); ++i) {
            rows[fam.k[i]][f] = {to_double(fam.contribution[i].re), to_double(fam.contribution[i].im)};
        }
    }
    std::ostringstream out;
    out << "contributions for n=" << result.n << " (re, im per family; block = |sum at k|)\n";
    out << std::setw(5) << "k";
    for (const char* name : rademacher::family_names) out << std::setw(28) << name;
    out << std::setw(14) << "block" << '\n';
    out << std::scientific << std::setprecision(5);
    for (const auto& [k, cells] : rows) {
        out << std::setw(5) << k;
        for (const auto& [re, im] : cells) {
            std::ostringstream cell;
            cell << std::scientific << std::setprecision(5) << std::showpos << re << ' ' << im;
            out << std::setw(28) << cell.str();
        }
        out << std::setw(14) << to_double(result.block_modulus[static_cast<std::size_t>(k - 1)]) << '\n';
    }
    out << std::noshowpos << "totals:";
    for (const auto& fam : result.per_family) out << ' ' << fam.name << '=' << to_double(fam.total.re);
    out << "  estimate=" << std::setprecision(10) << to_double(result.estimate)
        << "  largest k with block > 0.5: " << result.largest_k_above_half << '\n';
    os << out.str();
}

template ReportRecord make_record<double>(const rademacher::ExactResult<double>&, const BigInt&, double);
template ReportRecord make_record<Extended>(const rademacher::ExactResult<Extended>&, const BigInt&, double);
template void write_contribution_table<double>(std::ostream&, const rademacher::ExactResult<double>&);
template void write_contribution_table<Extended>(std::ostream&, const rademacher::ExactResult<Extended>&);

}  // namespace pod2::report
