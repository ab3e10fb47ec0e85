#ifndef REGJUMP_SCAN_HPP
#define REGJUMP_SCAN_HPP

#include <optional>
#include <string>

#include "regjump/betti.hpp"

namespace regjump {

struct ScanRow {
    int k = 0;
    long long t0 = 0;
    long long reg = 0;
    std::optional<long long> delta; // reg(I^k) - reg(I^(k-1)), absent at k = 1
    std::optional<bool> jump;       // delta > s; only for single-degree ideals
};

struct LinearFit {
    long long slope = 0;
    long long intercept = 0;
    int stable_from = 0; // first k where reg = slope*k + intercept holds onward
};

/// Regularity scan over powers 1..kmax with jump detection and a trailing
/// linear fit. The fit is the maximal trailing collinear segment; it needs
/// at least two rows, otherwise it is reported inconclusive. The true
/// stabilization index is not observable from a finite window; stable_from
/// is only a lower-bound observation.
struct PowersScanReport {
    std::string ideal_label;
    FieldSpec field = FieldSpec::rationals();
    bool single_degree = false;
    long long generation_degree = 0; // s, meaningful when single_degree
    std::vector<ScanRow> rows;
    std::optional<LinearFit> fit;
    bool partial = false; // a per-power timeout cut the scan short
};

/// per_power_timeout_seconds: when a power exceeds it, the scan stops
/// after that row and the report is marked partial.
PowersScanReport scan_powers(const MonomialIdeal& ideal, const FieldSpec& field, int kmax,
                             std::string label,
                             std::optional<double> per_power_timeout_seconds = std::nullopt,
                             int threads = 0);

} // namespace regjump

#endif
