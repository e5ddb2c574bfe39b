#pragma once

// Serialization of exact-formula results: one record per n, as JSON (one
// object per line), CSV, or a human table with per-family magnitude bars.

#include "pod2/rademacher.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace pod2::report {

using qseries::BigInt;

struct FamilyTotal {
    std::string family;
    double total = 0;  // real part of the family's partial sum
    friend bool operator==(const FamilyTotal&, const FamilyTotal&) = default;
};

struct ReportRecord {
    std::int64_t n = 0;
    BigInt oracle = 0;
    double estimate = 0;
    BigInt rounded = 0;
    double diff = 0;  // |estimate - oracle|
    double imag_residual = 0;
    bool converged = false;
    std::array<FamilyTotal, 4> per_family;
    std::int64_t k_max = 0;
    double quad_tol = 0;
    double ms = 0;
    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

template <class Real>
ReportRecord make_record(const rademacher::ExactResult<Real>& result, const BigInt& oracle, double ms);

std::string to_json(const ReportRecord& r);
ReportRecord from_json(const std::string& line);

std::string csv_header();
std::string to_csv(const ReportRecord& r);
ReportRecord from_csv(const std::string& line);

/// Multi-line human rendering with magnitude bars.
void write_human(std::ostream& os, const ReportRecord& r);

/// Per-family, per-k contribution table (real and imaginary parts), written
/// when an estimate fails to round to the oracle.
template <class Real>
void write_contribution_table(std::ostream& os, const rademacher::ExactResult<Real>& result);

}  // namespace pod2::report
