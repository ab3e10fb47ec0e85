#include "regjump/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace regjump {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw validation_error("malformed JSON input");
    return j;
}

ContextPtr context_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw validation_error(std::string("JSON object needs a '") + key + "' array");
    std::vector<std::string> names;
    for (const auto& v : j[key]) {
        if (!v.is_string())
            throw validation_error("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    return make_context(std::move(names));
}

Monomial monomial_from_json_value(const ContextPtr& ctx, const json& v) {
    if (v.is_string())
        return parse_monomial(ctx, v.get<std::string>());
    if (!v.is_array())
        throw validation_error("generators must be exponent arrays or monomial strings");
    if (v.size() != ctx->size())
        throw validation_error("exponent vector length does not match the variable list");
    std::vector<Exponent> exps;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw validation_error("exponents must be integers");
        long long x = e.get<long long>();
        if (x < 0 || x > std::numeric_limits<Exponent>::max())
            throw validation_error("exponents must be small nonnegative integers");
        exps.push_back(static_cast<Exponent>(x));
    }
    return Monomial(ctx, std::move(exps));
}

std::string join_generators(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i)
            out << ", ";
        out << ideal.generators()[i].str();
    }
    out << ")";
    return out.str();
}

} // namespace

MonomialIdeal ideal_from_json_string(const std::string& text) {
    json j = parse_json(text);
    ContextPtr ctx = context_from_json(j, "variables");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw validation_error("JSON ideal needs a nonempty 'generators' array");
    std::vector<Monomial> gens;
    for (const auto& v : j["generators"])
        gens.push_back(monomial_from_json_value(ctx, v));
    return MonomialIdeal::minimal_generators(gens);
}

std::string ideal_to_json_string(const MonomialIdeal& ideal, int indent) {
    json j;
    j["variables"] = ideal.context()->names();
    json gens = json::array();
    for (const Monomial& g : ideal.generators()) {
        json exps = json::array();
        for (Exponent e : g.exponents())
            exps.push_back(e);
        gens.push_back(exps);
    }
    j["generators"] = gens;
    return j.dump(indent);
}

Monomial parse_monomial(const ContextPtr& context, std::string_view text) {
    std::vector<Exponent> exps(context->size(), 0);
    std::size_t pos = 0;
    auto skip_space = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_space();
    if (pos >= text.size())
        throw validation_error("empty monomial");
    bool first = true;
    while (pos < text.size()) {
        skip_space();
        if (!first) {
            if (pos >= text.size())
                break;
            if (text[pos] != '*')
                throw validation_error("expected '*' between monomial factors");
            ++pos;
            skip_space();
        }
        first = false;
        if (pos < text.size() && text[pos] == '1' &&
            (pos + 1 == text.size() || text[pos + 1] == '*' ||
             std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            skip_space();
            continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '*' && text[pos] != '^' &&
               !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::string_view name = text.substr(start, pos - start);
        auto index = context->index_of(name);
        if (!index)
            throw validation_error("unknown variable '" + std::string(name) + "'");
        long long exponent = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_space();
            std::size_t num_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (num_start == pos)
                throw validation_error("missing exponent after '^'");
            auto sv = text.substr(num_start, pos - num_start);
            std::from_chars(sv.data(), sv.data() + sv.size(), exponent);
            skip_space();
        }
        if (exponent < 0 || exponent > std::numeric_limits<Exponent>::max())
            throw validation_error("exponent out of range");
        Exponent sum;
        if (__builtin_add_overflow(exps[*index], static_cast<Exponent>(exponent), &sum))
            throw exponent_overflow_error("exponent out of range");
        exps[*index] = sum;
    }
    return Monomial(context, std::move(exps));
}

PseudoLinearInstance instance_from_json_string(const std::string& text) {
    json j = parse_json(text);
    ContextPtr zctx = context_from_json(j, "z_vars");
    ContextPtr xctx = context_from_json(j, "x_vars");
    if (!j.contains("monomials") || !j["monomials"].is_array() || j["monomials"].empty())
        throw validation_error("instance needs a nonempty 'monomials' array");
    std::vector<Monomial> m;
    for (const auto& v : j["monomials"])
        m.push_back(monomial_from_json_value(zctx, v));
    if (!j.contains("phi") || !j["phi"].is_array())
        throw validation_error("instance needs a 'phi' array of x-variable names");
    std::vector<std::size_t> phi;
    for (const auto& v : j["phi"]) {
        if (!v.is_string())
            throw validation_error("phi entries must be x-variable names");
        auto idx = xctx->index_of(v.get<std::string>());
        if (!idx)
            throw validation_error("phi names an unknown x variable: " + v.get<std::string>());
        phi.push_back(*idx);
    }
    int p = 1;
    if (j.contains("p")) {
        if (!j["p"].is_number_integer())
            throw validation_error("'p' must be an integer");
        p = j["p"].get<int>();
    }
    return make_pseudo_linear_instance(zctx, xctx, std::move(m), std::move(phi), p);
}

std::string render_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "variables: ";
    for (std::size_t i = 0; i < ideal.context()->size(); ++i) {
        if (i)
            out << ", ";
        out << ideal.context()->name(i);
    }
    out << "\nminimal generators (" << ideal.generator_count() << "): " << join_generators(ideal)
        << "\n";
    return out.str();
}

std::string render_betti_table(const BettiTable& table) {
    const auto& entries = table.entries();
    if (entries.empty())
        return "(empty table)\n";
    int max_i = table.max_homological_index();
    long long min_slant = std::numeric_limits<long long>::max();
    long long max_slant = std::numeric_limits<long long>::min();
    for (const auto& [key, dim] : entries) {
        min_slant = std::min(min_slant, key.second - key.first);
        max_slant = std::max(max_slant, key.second - key.first);
    }
    std::ostringstream out;
    out << "betti numbers of the ideal over " << table.field().str()
        << " (row = homological index i, column = j - i)\n";
    std::size_t width = 6;
    out << std::string(8, ' ');
    for (long long s = min_slant; s <= max_slant; ++s) {
        std::string header = std::to_string(s);
        out << std::string(width - header.size(), ' ') << header;
    }
    out << "\n";
    for (int i = 0; i <= max_i; ++i) {
        std::string label = std::to_string(i);
        out << std::string(8 - 2 - label.size(), ' ') << label << " |";
        for (long long s = min_slant; s <= max_slant; ++s) {
            long long v = table.entry(i, s + i);
            std::string cell = v == 0 ? "." : std::to_string(v);
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    out << "regularity = " << table.regularity() << "\n";
    return out.str();
}

std::string betti_to_json_string(const BettiTable& table, int indent) {
    json j;
    j["field"] = table.field().str();
    j["convention"] = BettiTable::convention;
    json entries = json::array();
    for (const auto& [key, dim] : table.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
    j["entries"] = entries;
    j["regularity"] = table.regularity();
    return j.dump(indent);
}

std::string betti_to_csv(const BettiTable& table) {
    std::ostringstream out;
    out << "i,j,dim\n";
    for (const auto& [key, dim] : table.entries())
        out << key.first << "," << key.second << "," << dim << "\n";
    return out.str();
}

std::string render_scan(const PowersScanReport& report) {
    std::ostringstream out;
    out << "powers scan of " << report.ideal_label << " over " << report.field.str() << "\n";
    if (report.single_degree)
        out << "generated in single degree s = " << report.generation_degree
            << " (a jump is delta > s)\n";
    else
        out << "mixed generator degrees; jump detection disabled\n";
    out << "   k    t0   reg delta  jump\n";
    for (const ScanRow& row : report.rows) {
        auto cell = [&](const std::string& s, std::size_t w) {
            return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
        };
        out << cell(std::to_string(row.k), 4) << cell(std::to_string(row.t0), 6)
            << cell(std::to_string(row.reg), 6)
            << cell(row.delta ? std::to_string(*row.delta) : "-", 6)
            << cell(row.jump ? (*row.jump ? "JUMP" : "no") : "-", 6) << "\n";
    }
    if (report.fit)
        out << "trailing fit: reg(I^k) = " << report.fit->slope << "*k"
            << (report.fit->intercept >= 0 ? " + " : " - ")
            << std::abs(report.fit->intercept) << " from k = " << report.fit->stable_from
            << " within the window (the true stabilization index may be larger)\n";
    else
        out << "trailing fit: inconclusive (fewer than two rows)\n";
    if (report.partial)
        out << "PARTIAL: the per-power timeout cut the scan short\n";
    return out.str();
}

std::string scan_to_json_string(const PowersScanReport& report, int indent) {
    json j;
    j["ideal"] = report.ideal_label;
    j["field"] = report.field.str();
    j["single_degree"] = report.single_degree;
    if (report.single_degree)
        j["generation_degree"] = report.generation_degree;
    json rows = json::array();
    for (const ScanRow& row : report.rows) {
        json r{{"k", row.k}, {"t0", row.t0}, {"reg", row.reg}};
        if (row.delta)
            r["delta"] = *row.delta;
        if (row.jump)
            r["jump"] = *row.jump;
        rows.push_back(r);
    }
    j["rows"] = rows;
    if (report.fit)
        j["fit"] = {{"slope", report.fit->slope},
                    {"intercept", report.fit->intercept},
                    {"stable_from", report.fit->stable_from}};
    else
        j["fit"] = nullptr;
    j["partial"] = report.partial;
    return j.dump(indent);
}

std::string scan_to_csv(const PowersScanReport& report) {
    std::ostringstream out;
    out << "k,t0,reg,delta,jump\n";
    for (const ScanRow& row : report.rows) {
        out << row.k << "," << row.t0 << "," << row.reg << ",";
        if (row.delta)
            out << *row.delta;
        out << ",";
        if (row.jump)
            out << (*row.jump ? "true" : "false");
        out << "\n";
    }
    return out.str();
}

std::string render_quotient_report(const QuotientReport& report, bool show_steps) {
    std::ostringstream out;
    out << "generators in order:";
    for (const Monomial& g : report.ordered.order)
        out << " " << g.str();
    out << "\n";
    if (report.mixed_degrees)
        out << "note: mixed generator degrees; linear quotients are defined for "
               "single-degree ideals\n";
    if (show_steps) {
        for (std::size_t k = 0; k < report.steps.size(); ++k) {
            const QuotientStep& step = report.steps[k];
            out << "step " << (k + 1) << ": (prefix) : " << step.generator.str() << " = (";
            for (std::size_t i = 0; i < step.colon_generators.size(); ++i) {
                if (i)
                    out << ", ";
                out << step.colon_generators[i].str();
            }
            out << ")" << (step.linear ? "" : "   <- not linear") << "\n";
        }
    }
    out << "linear quotients: " << (report.linear ? "yes" : "no") << "\n";
    return out.str();
}

std::string quotient_report_to_json_string(const QuotientReport& report, int indent) {
    json j;
    json order = json::array();
    for (const Monomial& g : report.ordered.order)
        order.push_back(g.str());
    j["order"] = order;
    j["linear"] = report.linear;
    j["mixed_degrees"] = report.mixed_degrees;
    json steps = json::array();
    for (const QuotientStep& step : report.steps) {
        json colon = json::array();
        for (const Monomial& g : step.colon_generators)
            colon.push_back(g.str());
        steps.push_back({{"generator", step.generator.str()},
                         {"colon", colon},
                         {"linear", step.linear}});
    }
    j["steps"] = steps;
    return j.dump(indent);
}

namespace {

std::string t_monomial_str(const std::vector<int>& exps) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (any)
            out << "*";
        out << "t" << (i + 1);
        if (exps[i] != 1)
            out << "^" << exps[i];
        any = true;
    }
    return any ? out.str() : "1";
}

} // namespace

std::string render_fiber_binomial(const PseudoLinearInstance& /*inst*/, const FiberBinomial& fb) {
    std::ostringstream out;
    out << fb.M.str() << " * " << t_monomial_str(fb.A) << " - " << fb.N.str() << " * "
        << t_monomial_str(fb.B) << "  (a = " << fb.a << ", b = " << fb.b << ")";
    return out.str();
}

std::string render_pseudo_linear_verdict(const PseudoLinearInstance& inst,
                                         const PseudoLinearVerdict& verdict) {
    std::ostringstream out;
    out << "monomials:";
    for (const Monomial& mi : inst.m)
        out << " " << mi.str();
    out << "\nphi:";
    for (std::size_t i = 0; i < inst.phi.size(); ++i)
        out << " t" << (i + 1) << "->" << inst.x_context->name(inst.phi[i]);
    out << "\norder p = " << inst.p << "\n";
    out << "binomials checked: " << verdict.binomials_checked << "\n";
    if (verdict.pseudo_linear) {
        out << "pseudo-linear of order " << inst.p << ": yes\n";
    } else {
        out << "pseudo-linear of order " << inst.p << ": no\n";
        if (verdict.counterexample)
            out << "counterexample: " << render_fiber_binomial(inst, *verdict.counterexample)
                << "\n";
    }
    return out.str();
}

std::string pseudo_linear_verdict_to_json_string(const PseudoLinearInstance& inst,
                                                 const PseudoLinearVerdict& verdict,
                                                 int indent) {
    json j;
    json m = json::array();
    for (const Monomial& mi : inst.m)
        m.push_back(mi.str());
    j["monomials"] = m;
    j["p"] = inst.p;
    j["pseudo_linear"] = verdict.pseudo_linear;
    j["binomials_checked"] = verdict.binomials_checked;
    if (verdict.counterexample)
        j["counterexample"] = render_fiber_binomial(inst, *verdict.counterexample);
    return j.dump(indent);
}

std::string render_certificate(const SyzygyCertificate& cert) {
    std::ostringstream out;
    out << "first-syzygy certificate for J(" << cert.d << ")^" << cert.d << ":\n";
    out << "  x1^" << cert.d << " lies in V : u            " << (cert.x_power_in_colon ? "yes" : "NO")
        << "\n";
    out << "  no smaller x1 power does     " << (cert.no_smaller_power ? "yes" : "NO") << "\n";
    out << "  x1^" << cert.d << " is a minimal generator   "
        << (cert.x_power_is_minimal ? "yes" : "NO") << "\n";
    out << "certificate " << (cert.holds ? "holds" : "FAILS") << "\n";
    if (cert.holds)
        out << "implies a first syzygy in degree " << cert.syzygy_degree
            << ", hence regularity >= " << cert.regularity_lower_bound << "\n";
    if (cert.betti_first_syzygies)
        out << "betti cross-check over q: beta_(1," << cert.syzygy_degree
            << ") = " << *cert.betti_first_syzygies << "\n";
    return out.str();
}

std::string certificate_to_json_string(const SyzygyCertificate& cert, int indent) {
    json j;
    j["d"] = cert.d;
    j["holds"] = cert.holds;
    j["x_power_in_colon"] = cert.x_power_in_colon;
    j["no_smaller_power"] = cert.no_smaller_power;
    j["x_power_is_minimal"] = cert.x_power_is_minimal;
    j["syzygy_degree"] = cert.syzygy_degree;
    j["regularity_lower_bound"] = cert.regularity_lower_bound;
    if (cert.betti_first_syzygies)
        j["betti_first_syzygies"] = *cert.betti_first_syzygies;
    return j.dump(indent);
}

} // namespace regjump
