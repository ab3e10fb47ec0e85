#ifndef REGJUMP_IO_HPP
#define REGJUMP_IO_HPP

#include <string>
#include <string_view>

#include "regjump/betti.hpp"
#include "regjump/ideal.hpp"
#include "regjump/quotients.hpp"
#include "regjump/rees.hpp"
#include "regjump/scan.hpp"

namespace regjump {

/// Ideal wire format: {"variables": ["x1", ...], "generators": [[2,0,...]
/// or "x1^2*z1^3", ...]}. Exponent vectors align with `variables`.
MonomialIdeal ideal_from_json_string(const std::string& text);
std::string ideal_to_json_string(const MonomialIdeal& ideal, int indent = -1);

/// Human monomial syntax: factors joined by '*', each `name` or
/// `name^exponent`; "1" is the identity.
Monomial parse_monomial(const ContextPtr& context, std::string_view text);

/// Instance file format: {"z_vars": [...], "x_vars": [...],
/// "monomials": [[...]|"...", ...], "phi": ["x1", ...], "p": 1}.
PseudoLinearInstance instance_from_json_string(const std::string& text);

std::string render_ideal(const MonomialIdeal& ideal);

std::string render_betti_table(const BettiTable& table);
std::string betti_to_json_string(const BettiTable& table, int indent = -1);
std::string betti_to_csv(const BettiTable& table);

std::string render_scan(const PowersScanReport& report);
std::string scan_to_json_string(const PowersScanReport& report, int indent = -1);
std::string scan_to_csv(const PowersScanReport& report);

std::string render_quotient_report(const QuotientReport& report, bool show_steps);
std::string quotient_report_to_json_string(const QuotientReport& report, int indent = -1);

std::string render_fiber_binomial(const PseudoLinearInstance& inst, const FiberBinomial& fb);
std::string render_pseudo_linear_verdict(const PseudoLinearInstance& inst,
                                         const PseudoLinearVerdict& verdict);
std::string pseudo_linear_verdict_to_json_string(const PseudoLinearInstance& inst,
                                                 const PseudoLinearVerdict& verdict,
                                                 int indent = -1);

std::string render_certificate(const SyzygyCertificate& cert);
std::string certificate_to_json_string(const SyzygyCertificate& cert, int indent = -1);

} // namespace regjump

#endif
