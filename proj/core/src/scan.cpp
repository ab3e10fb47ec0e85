#include "regjump/scan.hpp"

#include <chrono>

namespace regjump {

PowersScanReport scan_powers(const MonomialIdeal& ideal, const FieldSpec& field, int kmax,
                             std::string label,
                             std::optional<double> per_power_timeout_seconds, int threads) {
    if (kmax < 1)
        throw validation_error("scan_powers requires kmax >= 1");
    ideal.require_analyzable("scan_powers");
    PowersScanReport report;
    report.ideal_label = std::move(label);
    report.field = field;
    report.single_degree = ideal.generated_in_single_degree();
    report.generation_degree = ideal.max_generator_degree();

    MonomialIdeal current = ideal;
    std::optional<long long> previous_reg;
    for (int k = 1; k <= kmax; ++k) {
        auto started = std::chrono::steady_clock::now();
        if (k > 1)
            current = multiply(current, ideal);
        ScanRow row;
        row.k = k;
        row.t0 = current.max_generator_degree();
        row.reg = regularity(current, field, threads);
        if (previous_reg) {
            row.delta = row.reg - *previous_reg;
            if (report.single_degree)
                row.jump = *row.delta > report.generation_degree;
        }
        previous_reg = row.reg;
        report.rows.push_back(row);
        if (per_power_timeout_seconds) {
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
            if (elapsed > *per_power_timeout_seconds && k < kmax) {
                report.partial = true;
                break;
            }
        }
    }

    // Maximal trailing segment with a constant step.
    if (report.rows.size() >= 2) {
        std::size_t last = report.rows.size() - 1;
        long long slope = report.rows[last].reg - report.rows[last - 1].reg;
        std::size_t start = last - 1;
        while (start > 0 && report.rows[start].reg - report.rows[start - 1].reg == slope)
            --start;
        LinearFit fit;
        fit.slope = slope;
        fit.intercept = report.rows[last].reg - slope * report.rows[last].k;
        fit.stable_from = report.rows[start].k;
        report.fit = fit;
    }
    return report;
}

} // namespace regjump
