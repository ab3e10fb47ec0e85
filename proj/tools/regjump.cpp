#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "regjump/families.hpp"
#include "regjump/io.hpp"
#include "regjump/scan.hpp"
#include "regjump/taylor.hpp"

using namespace regjump;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;
constexpr int kExitBudget = 4;

struct IdealInput {
    std::string family;
    int d = 2;
    int a = 2;
    int b = 3;
    std::string ideal_json;
    std::string ideal_file;
    std::string gens;
    std::string vars;
    int power_k = 1;

    void add_options(CLI::App* cmd, bool with_power = true) {
        cmd->add_option("--family", family,
                        "Bundled ideal: J, H, Sq, multijump, terai, conca-herzog, sturmfels");
        cmd->add_option("--d", d, "Family parameter d (J, H, Sq)");
        cmd->add_option("--a", a, "Multijump parameter a");
        cmd->add_option("--b", b, "Multijump parameter b");
        cmd->add_option("--ideal", ideal_json, "Ideal as inline JSON");
        cmd->add_option("--ideal-file", ideal_file, "Path to an ideal JSON file");
        cmd->add_option("--gens", gens,
                        "Comma-separated generators in human syntax (needs --vars)");
        cmd->add_option("--vars", vars, "Comma-separated ordered variable names for --gens");
        if (with_power)
            cmd->add_option("--power", power_k, "Analyze this power of the ideal")
                ->check(CLI::PositiveNumber);
    }

    /// Resolve to (ideal, label, listed order when one is classical).
    std::tuple<MonomialIdeal, std::string, std::optional<OrderedGenerators>> resolve() const {
        int sources = !family.empty();
        sources += !ideal_json.empty();
        sources += !ideal_file.empty();
        sources += !gens.empty();
        if (sources != 1)
            throw validation_error(
                "choose exactly one input: --family, --ideal, --ideal-file or --gens");
        if (!family.empty()) {
            if (family == "J")
                return {family_J(d), "J(" + std::to_string(d) + ")", std::nullopt};
            if (family == "H")
                return {family_H(d), "H(" + std::to_string(d) + ")", std::nullopt};
            if (family == "Sq")
                return {family_Sq(d), "Sq(" + std::to_string(d) + ")", std::nullopt};
            if (family == "multijump")
                return {family_multijump(a, b),
                        "multijump(" + std::to_string(a) + "," + std::to_string(b) + ")",
                        std::nullopt};
            if (family == "terai")
                return {example_terai(), "terai", example_terai_listed()};
            if (family == "conca-herzog")
                return {example_conca_herzog(), "conca-herzog",
                        example_conca_herzog_listed()};
            if (family == "sturmfels")
                return {example_sturmfels(), "sturmfels", example_sturmfels_listed()};
            throw validation_error("unknown family: " + family);
        }
        if (!ideal_json.empty())
            return {ideal_from_json_string(ideal_json), "(inline ideal)", std::nullopt};
        if (!ideal_file.empty()) {
            std::ifstream in(ideal_file);
            if (!in)
                throw validation_error("cannot open " + ideal_file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return {ideal_from_json_string(buffer.str()), ideal_file, std::nullopt};
        }
        if (vars.empty())
            throw validation_error("--gens needs --vars with the ordered variable names");
        std::vector<std::string> names;
        std::stringstream vs(vars);
        std::string token;
        while (std::getline(vs, token, ',')) {
            token.erase(0, token.find_first_not_of(" \t"));
            token.erase(token.find_last_not_of(" \t") + 1);
            if (!token.empty())
                names.push_back(token);
        }
        ContextPtr ctx = make_context(std::move(names));
        std::vector<Monomial> listed;
        std::stringstream gs(gens);
        while (std::getline(gs, token, ','))
            listed.push_back(parse_monomial(ctx, token));
        MonomialIdeal ideal = MonomialIdeal::minimal_generators(listed);
        std::optional<OrderedGenerators> order;
        std::vector<Monomial> sorted = listed;
        std::sort(sorted.begin(), sorted.end(), LexDescending{});
        if (sorted == ideal.generators())
            order = make_ordered_generators(ideal, listed);
        return {ideal, "(inline ideal)", order};
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void start_watchdog(double seconds) {
    if (seconds <= 0)
        return;
    std::thread([seconds]() {
        std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
        std::cerr << "regjump: timeout after " << seconds << "s\n";
        std::_Exit(kExitBudget);
    }).detach();
}

// ---------------------------------------------------------------------------
// reproduce: one-shot checks of the bundled claims
// ---------------------------------------------------------------------------

struct ClaimResult {
    enum class Kind { pass, fail, report } kind;
    std::vector<std::string> lines;
};

struct Claim {
    std::string id;
    std::string description;
    std::function<ClaimResult()> run;
};

ClaimResult hard_claim(std::vector<std::pair<std::string, bool>> checks) {
    ClaimResult result{ClaimResult::Kind::pass, {}};
    for (auto& [text, ok] : checks) {
        result.lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + text);
        if (!ok)
            result.kind = ClaimResult::Kind::fail;
    }
    return result;
}

ClaimResult scan_claim(const MonomialIdeal& ideal, const std::string& label, int kmax,
                       const std::function<std::string(int, long long)>& against) {
    PowersScanReport report = scan_powers(ideal, FieldSpec::rationals(), kmax, label);
    ClaimResult result{ClaimResult::Kind::report, {}};
    result.lines.push_back("  report-only scan of " + label + " over q");
    for (const ScanRow& row : report.rows)
        result.lines.push_back("    k=" + std::to_string(row.k) +
                               " observed reg=" + std::to_string(row.reg) + "  " +
                               against(row.k, row.reg));
    return result;
}

std::vector<Claim> claim_registry() {
    std::vector<Claim> claims;
    claims.push_back(
        {"terai-reg", "Terai ideal: reg = 3 and reg of the square = 7 over q", []() {
             MonomialIdeal terai = example_terai();
             long long reg1 = regularity(terai, FieldSpec::rationals());
             long long reg2 = regularity(power(terai, 2), FieldSpec::rationals());
             return hard_claim({{"reg(I) = 3, got " + std::to_string(reg1), reg1 == 3},
                                {"reg(I^2) = 7, got " + std::to_string(reg2), reg2 == 7}});
         }});
    claims.push_back(
        {"terai-char2", "Terai ideal has no linear resolution over fp:2", []() {
             bool linear = has_linear_resolution(example_terai(), FieldSpec::prime_field(2));
             return hard_claim({{"linear resolution over fp:2 is absent", !linear}});
         }});
    claims.push_back(
        {"terai-no-lq", "Terai ideal admits no linear-quotients order at all", []() {
             SearchResult r = search_linear_quotients(example_terai(), 50000000ull);
             return hard_claim(
                 {{"exhaustive search found no order (nodes: " +
                       std::to_string(r.nodes_expanded) + ")",
                   r.status == SearchStatus::exhausted}});
         }});
    auto square_claim = [](const char* id, const char* text, MonomialIdeal (*make)(),
                           OrderedGenerators (*listed)()) {
        return Claim{id, text, [make, listed]() {
                         MonomialIdeal ideal = make();
                         QuotientReport lq = check_linear_quotients(listed());
                         std::vector<std::pair<std::string, bool>> checks;
                         checks.push_back({"listed order has linear quotients", lq.linear});
                         MonomialIdeal square = power(ideal, 2);
                         for (auto field :
                              {FieldSpec::rationals(), FieldSpec::prime_field(2)}) {
                             long long reg1 = regularity(ideal, field);
                             checks.push_back({"reg(I) = 3 over " + field.str() + ", got " +
                                                   std::to_string(reg1),
                                               reg1 == 3});
                             long long beta = betti_table(square, field).entry(1, 7);
                             checks.push_back({"first syzygy of the square in degree 7 over " +
                                                   field.str() + " (count " +
                                                   std::to_string(beta) + ")",
                                               beta >= 1});
                             checks.push_back({"reg(I^2) > 6 over " + field.str(),
                                               regularity(square, field) > 6});
                         }
                         return hard_claim(checks);
                     }};
    };
    claims.push_back(square_claim("conca-herzog",
                                  "Conca-Herzog ideal: linear quotients, reg 3, square jumps",
                                  &example_conca_herzog, &example_conca_herzog_listed));
    claims.push_back(square_claim("sturmfels",
                                  "Sturmfels ideal: linear quotients, reg 3, square jumps",
                                  &example_sturmfels, &example_sturmfels_listed));
    auto jump_claim = [](int d) {
        return [d]() {
            std::vector<std::pair<std::string, bool>> checks;
            for (int a = 1; a < d; ++a) {
                bool linear = check_linear_quotients(family_J_block_order(d, a)).linear;
                checks.push_back({"block order of J^" + std::to_string(a) +
                                      " has linear quotients",
                                  linear});
                long long reg = regularity(power(family_J(d), a), FieldSpec::rationals());
                checks.push_back({"reg(J^" + std::to_string(a) + ") = " +
                                      std::to_string(a * (d + 1)) + ", got " +
                                      std::to_string(reg),
                                  reg == static_cast<long long>(a) * (d + 1)});
            }
            SyzygyCertificate cert = syzygy_certificate(d);
            checks.push_back({"first-syzygy certificate holds", cert.holds});
            if (cert.betti_first_syzygies)
                checks.push_back({"first syzygy of J^d in degree " +
                                      std::to_string(cert.syzygy_degree) + " over q (count " +
                                      std::to_string(*cert.betti_first_syzygies) + ")",
                                  *cert.betti_first_syzygies >= 1});
            long long regd = regularity(power(family_J(d), d), FieldSpec::rationals());
            checks.push_back({"reg(J^d) >= " + std::to_string(cert.regularity_lower_bound) +
                                  ", got " + std::to_string(regd),
                              regd >= cert.regularity_lower_bound});
            return hard_claim(checks);
        };
    };
    claims.push_back({"jump-d2", "Jump family at d = 2: linear below d, syzygy jump at d",
                      jump_claim(2)});
    claims.push_back({"jump-d3", "Jump family at d = 3: linear below d, syzygy jump at d",
                      jump_claim(3)});
    for (int d : {2, 3, 4}) {
        claims.push_back(
            {"pseudolinear-d" + std::to_string(d),
             "Pseudo-linearity of the jump instance holds at order d-1" +
                 std::string(d <= 3 ? " and fails at order d" : ""),
             [d]() {
                 std::vector<std::pair<std::string, bool>> checks;
                 checks.push_back({"order " + std::to_string(d - 1) + " verified",
                                   verify_pseudo_linear(jump_instance(d, d - 1)).pseudo_linear});
                 if (d <= 3) {
                     PseudoLinearVerdict bad = verify_pseudo_linear(jump_instance(d, d));
                     checks.push_back(
                         {"order " + std::to_string(d) + " fails with a counterexample",
                          !bad.pseudo_linear && bad.counterexample.has_value()});
                 }
                 return hard_claim(checks);
             }});
    }
    claims.push_back({"h-specializes", "H(2) is the Conca-Herzog ideal up to renaming", []() {
                          auto witness =
                              iso_under_renaming(family_H(2), example_conca_herzog());
                          return hard_claim({{"renaming found", witness.has_value()}});
                      }});
    claims.push_back({"sq-specializes", "Sq(2) is the Sturmfels ideal up to renaming", []() {
                          auto witness = iso_under_renaming(family_Sq(2), example_sturmfels());
                          return hard_claim({{"renaming found", witness.has_value()}});
                      }});
    claims.push_back({"scan-j-d2", "Report-only: reg of J(2)^k against k(d+1), then k(d+1)+d-1",
                      []() {
                          return scan_claim(family_J(2), "J(2)", 4, [](int k, long long reg) {
                              int d = 2;
                              long long guess =
                                  k < d ? static_cast<long long>(k) * (d + 1)
                                        : static_cast<long long>(k) * (d + 1) + d - 1;
                              return "guessed " + std::to_string(guess) +
                                     (reg == guess ? " (matches)" : " (DIFFERS)");
                          });
                      }});
    for (int d : {2, 3}) {
        claims.push_back(
            {"scan-h-d" + std::to_string(d),
             "Report-only: reg of H(" + std::to_string(d) + ")^k against k(d+1)", [d]() {
                 return scan_claim(family_H(d), "H(" + std::to_string(d) + ")", d,
                                   [d](int k, long long reg) -> std::string {
                                       if (k < d) {
                                           long long guess =
                                               static_cast<long long>(k) * (d + 1);
                                           return "believed " + std::to_string(guess) +
                                                  (reg == guess ? " (matches)" : " (DIFFERS)");
                                       }
                                       long long bound =
                                           static_cast<long long>(d) * (d + 1) + d - 1;
                                       return "believed >= " + std::to_string(bound) +
                                              (reg >= bound ? " (matches)" : " (DIFFERS)");
                                   });
             }});
    }
    claims.push_back({"scan-sq-d2", "Report-only: reg of Sq(2)^k against 3k, then > 3d", []() {
                          return scan_claim(family_Sq(2), "Sq(2)", 2,
                                            [](int k, long long reg) -> std::string {
                                                int d = 2;
                                                if (k < d)
                                                    return "conjectured " +
                                                           std::to_string(3 * k) +
                                                           (reg == 3 * k ? " (matches)"
                                                                         : " (DIFFERS)");
                                                return "conjectured > " + std::to_string(3 * d) +
                                                       (reg > 3 * d ? " (matches)"
                                                                    : " (DIFFERS)");
                                            });
                      }});
    claims.push_back(
        {"scan-multijump-2-3", "Report-only: multijump(2,3) expectations at k = a and k = b",
         []() {
             MonomialIdeal ideal = family_multijump(2, 3);
             PowersScanReport report =
                 scan_powers(ideal, FieldSpec::rationals(), 3, "multijump(2,3)");
             ClaimResult result{ClaimResult::Kind::report, {}};
             result.lines.push_back("  report-only scan of multijump(2,3) over q");
             long long b = 3;
             for (const ScanRow& row : report.rows) {
                 std::string note;
                 if (row.k == 1)
                     note = "expected reg = " + std::to_string(b + 1) +
                            (row.reg == b + 1 ? " (matches)" : " (DIFFERS)");
                 else if (row.delta)
                     note = "expected jump (delta > " + std::to_string(b + 1) + "): " +
                            (*row.delta > b + 1 ? "seen" : "not seen");
                 result.lines.push_back(
                     "    k=" + std::to_string(row.k) + " reg=" + std::to_string(row.reg) +
                     (row.delta ? " delta=" + std::to_string(*row.delta) : "") + "  " + note);
             }
             return result;
         }});
    return claims;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"regjump: exact Betti numbers, regularity and linear-quotients "
                 "machinery for monomial ideals and their powers"};
    app.require_subcommand(1);
    int threads = 0;
    double timeout = 0;
    app.add_option("--threads", threads,
                   "Worker threads for homology (default: REGJUMP_THREADS or all cores)");
    app.add_option("--timeout", timeout, "Whole-command timeout in seconds (exit code 4)");

    std::string format = "table";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    // betti ------------------------------------------------------------
    auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of an ideal power");
    IdealInput betti_input;
    betti_input.add_options(betti_cmd);
    std::string field_text = "q";
    betti_cmd->add_option("--field", field_text, "Coefficient field: q or fp:<prime>");
    bool multigraded = false;
    betti_cmd->add_flag("--multigraded", multigraded, "Also list multigraded entries");
    add_format(betti_cmd);
    betti_cmd->callback([&]() {
        auto [ideal, label, listed] = betti_input.resolve();
        MonomialIdeal target =
            betti_input.power_k == 1 ? ideal : power(ideal, betti_input.power_k);
        FieldSpec field = FieldSpec::parse(field_text);
        BettiTable table = betti_table(target, field, threads);
        if (format == "json")
            std::cout << betti_to_json_string(table, 2) << "\n";
        else if (format == "csv")
            std::cout << betti_to_csv(table);
        else {
            std::cout << label;
            if (betti_input.power_k > 1)
                std::cout << "^" << betti_input.power_k;
            std::cout << ", " << target.generator_count() << " minimal generators\n"
                      << render_betti_table(table);
        }
        if (multigraded) {
            for (const auto& e : betti_table_multigraded(target, field, threads))
                std::cout << "beta(" << e.i << ", " << e.degree.str() << ") = " << e.dim
                          << "\n";
        }
    });

    // reg ----------------------------------------------------------------
    auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    IdealInput reg_input;
    reg_input.add_options(reg_cmd);
    reg_cmd->add_option("--field", field_text, "Coefficient field: q or fp:<prime>");
    add_format(reg_cmd);
    reg_cmd->callback([&]() {
        auto [ideal, label, listed] = reg_input.resolve();
        MonomialIdeal target = reg_input.power_k == 1 ? ideal : power(ideal, reg_input.power_k);
        FieldSpec field = FieldSpec::parse(field_text);
        long long reg = regularity(target, field, threads);
        bool linear = reg == target.min_generator_degree();
        if (format == "json")
            std::cout << "{\"regularity\":" << reg
                      << ",\"linear_resolution\":" << (linear ? "true" : "false") << "}\n";
        else
            std::cout << "reg = " << reg << (linear ? " (linear resolution)" : "") << "\n";
    });

    // power ----------------------------------------------------------------
    auto* power_cmd = app.add_subcommand("power", "Minimal generators of an ideal power");
    IdealInput power_input;
    power_input.add_options(power_cmd, false);
    int power_k = 2;
    power_cmd->add_option("--k", power_k, "Exponent")->check(CLI::PositiveNumber);
    add_format(power_cmd);
    power_cmd->callback([&]() {
        auto [ideal, label, listed] = power_input.resolve();
        MonomialIdeal result = power(ideal, power_k);
        if (format == "json")
            std::cout << ideal_to_json_string(result, 2) << "\n";
        else
            std::cout << render_ideal(result);
    });

    // colon ----------------------------------------------------------------
    auto* colon_cmd = app.add_subcommand("colon", "Colon ideal I : (u)");
    IdealInput colon_input;
    colon_input.add_options(colon_cmd);
    std::string by_text;
    colon_cmd->add_option("--by", by_text, "Monomial u in human syntax")->required();
    add_format(colon_cmd);
    colon_cmd->callback([&]() {
        auto [ideal, label, listed] = colon_input.resolve();
        MonomialIdeal target =
            colon_input.power_k == 1 ? ideal : power(ideal, colon_input.power_k);
        Monomial u = parse_monomial(target.context(), by_text);
        MonomialIdeal result = colon(target, u);
        if (result.is_unit()) {
            std::cout << (format == "json" ? "{\"unit\":true}\n" : "(1)  [unit ideal]\n");
            return;
        }
        if (format == "json")
            std::cout << ideal_to_json_string(result, 2) << "\n";
        else
            std::cout << render_ideal(result);
    });

    // scan-powers ------------------------------------------------------------
    auto* scan_cmd =
        app.add_subcommand("scan-powers", "Regularity of powers with jump detection and fit");
    IdealInput scan_input;
    scan_input.add_options(scan_cmd, false);
    int kmax = 4;
    scan_cmd->add_option("--kmax", kmax, "Scan powers 1..kmax")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--field", field_text, "Coefficient field: q or fp:<prime>");
    double per_power_timeout = 0;
    scan_cmd->add_option("--per-power-timeout", per_power_timeout,
                         "Stop after a power exceeds this many seconds; the report is "
                         "marked partial");
    add_format(scan_cmd);
    scan_cmd->callback([&]() {
        auto [ideal, label, listed] = scan_input.resolve();
        FieldSpec field = FieldSpec::parse(field_text);
        std::optional<double> per_k;
        if (per_power_timeout > 0)
            per_k = per_power_timeout;
        PowersScanReport report = scan_powers(ideal, field, kmax, label, per_k, threads);
        if (format == "json")
            std::cout << scan_to_json_string(report, 2) << "\n";
        else if (format == "csv")
            std::cout << scan_to_csv(report);
        else
            std::cout << render_scan(report);
    });

    // lq ----------------------------------------------------------------------
    auto* lq_cmd = app.add_subcommand("lq", "Linear quotients: check, search or block order");
    IdealInput lq_input;
    lq_input.add_options(lq_cmd);
    std::string order_mode = "given";
    lq_cmd->add_option("--order", order_mode, "given, search or block")
        ->check(CLI::IsMember({"given", "search", "block"}));
    std::uint64_t budget = 10000000ull;
    lq_cmd->add_option("--budget", budget, "Search budget in expanded nodes");
    bool show_steps = false;
    lq_cmd->add_flag("--show-steps", show_steps, "Print every prefix colon");
    add_format(lq_cmd);
    lq_cmd->callback([&]() {
        auto [ideal, label, listed] = lq_input.resolve();
        if (order_mode == "block") {
            if (lq_input.family != "J")
                throw validation_error("--order block is defined for --family J");
            OrderedGenerators og = family_J_block_order(lq_input.d, lq_input.power_k);
            QuotientReport report = check_linear_quotients(og);
            std::cout << (format == "json" ? quotient_report_to_json_string(report, 2) + "\n"
                                           : render_quotient_report(report, show_steps));
            return;
        }
        MonomialIdeal target = lq_input.power_k == 1 ? ideal : power(ideal, lq_input.power_k);
        if (order_mode == "given") {
            OrderedGenerators og = listed && lq_input.power_k == 1
                                       ? *listed
                                       : make_ordered_generators(target, target.generators());
            QuotientReport report = check_linear_quotients(og);
            std::cout << (format == "json" ? quotient_report_to_json_string(report, 2) + "\n"
                                           : render_quotient_report(report, show_steps));
            return;
        }
        SearchResult result = search_linear_quotients(target, budget);
        if (result.status == SearchStatus::witness_found) {
            QuotientReport report = check_linear_quotients(*result.witness);
            std::cout << (format == "json" ? quotient_report_to_json_string(report, 2) + "\n"
                                           : render_quotient_report(report, show_steps));
        } else if (result.status == SearchStatus::exhausted) {
            std::cout << (format == "json"
                              ? std::string("{\"status\":\"exhausted\"}\n")
                              : "exhausted: no linear-quotients order exists (nodes: " +
                                    std::to_string(result.nodes_expanded) + ")\n");
        } else {
            std::cout << (format == "json"
                              ? std::string("{\"status\":\"budget-exceeded\"}\n")
                              : "budget exceeded after " +
                                    std::to_string(result.nodes_expanded) + " nodes\n");
            std::exit(kExitBudget);
        }
    });

    // pseudolinear ---------------------------------------------------------------
    auto* pl_cmd =
        app.add_subcommand("pseudolinear", "Verify pseudo-linearity of a monomial instance");
    int pl_d = 2;
    int pl_p = 1;
    std::string instance_file;
    pl_cmd->add_option("--d", pl_d, "Jump instance parameter (z1^d, z2^d, z1^(d-1) z2)");
    pl_cmd->add_option("--p", pl_p, "Order to verify")->check(CLI::PositiveNumber);
    pl_cmd->add_option("--instance", instance_file, "Instance JSON file");
    add_format(pl_cmd);
    pl_cmd->callback([&]() {
        PseudoLinearInstance inst = instance_file.empty()
                                        ? jump_instance(pl_d, pl_p)
                                        : instance_from_json_string(slurp(instance_file));
        PseudoLinearVerdict verdict = verify_pseudo_linear(inst);
        std::cout << (format == "json"
                          ? pseudo_linear_verdict_to_json_string(inst, verdict, 2) + "\n"
                          : render_pseudo_linear_verdict(inst, verdict));
    });

    // certificate ------------------------------------------------------------------
    auto* cert_cmd =
        app.add_subcommand("certificate", "First-syzygy certificate for the jump family");
    int cert_d = 2;
    cert_cmd->add_option("--d", cert_d, "Family parameter d (>= 2)");
    bool no_betti = false;
    cert_cmd->add_flag("--no-betti-check", no_betti, "Skip the Betti cross-check");
    add_format(cert_cmd);
    cert_cmd->callback([&]() {
        std::optional<bool> crosscheck;
        if (no_betti)
            crosscheck = false;
        SyzygyCertificate cert = syzygy_certificate(cert_d, crosscheck);
        std::cout << (format == "json" ? certificate_to_json_string(cert, 2) + "\n"
                                       : render_certificate(cert));
        if (!cert.holds)
            std::exit(kExitComputation);
    });

    // family -------------------------------------------------------------------------
    auto* family_cmd = app.add_subcommand("family", "Print a bundled ideal");
    IdealInput family_input;
    family_input.add_options(family_cmd, false);
    add_format(family_cmd);
    family_cmd->callback([&]() {
        auto [ideal, label, listed] = family_input.resolve();
        if (format == "json") {
            std::cout << ideal_to_json_string(ideal, 2) << "\n";
            return;
        }
        std::cout << label << "\n" << render_ideal(ideal);
        if (family_input.family == "multijump") {
            MultijumpConstruction mj =
                family_multijump_detailed(family_input.a, family_input.b);
            if (mj.duplicate_mixed_generator)
                std::cout << "note: x*z1^" << (family_input.b - 1)
                          << "*z2 arises in two generator groups and was deduplicated\n";
        }
        if (listed) {
            std::cout << "listed order:";
            for (const Monomial& g : listed->order)
                std::cout << " " << g.str();
            std::cout << "\n";
        }
    });

    // reproduce -----------------------------------------------------------------------
    auto* repro_cmd = app.add_subcommand("reproduce", "Re-run a bundled claim by id");
    std::string claim_id;
    bool list_claims = false;
    bool run_all = false;
    repro_cmd->add_option("claim", claim_id, "Claim id (see --list)");
    repro_cmd->add_flag("--list", list_claims, "List claim ids");
    repro_cmd->add_flag("--all", run_all, "Run every claim");
    repro_cmd->callback([&]() {
        std::vector<Claim> claims = claim_registry();
        if (list_claims) {
            for (const Claim& c : claims)
                std::cout << c.id << "  " << c.description << "\n";
            return;
        }
        std::vector<const Claim*> selected;
        if (run_all) {
            for (const Claim& c : claims)
                selected.push_back(&c);
        } else {
            for (const Claim& c : claims)
                if (c.id == claim_id)
                    selected.push_back(&c);
            if (selected.empty())
                throw validation_error("unknown claim id: " + claim_id +
                                       " (use reproduce --list)");
        }
        bool any_failed = false;
        for (const Claim* c : selected) {
            ClaimResult result = c->run();
            const char* tag = result.kind == ClaimResult::Kind::pass     ? "PASS"
                              : result.kind == ClaimResult::Kind::fail   ? "FAIL"
                                                                         : "REPORT";
            std::cout << "[" << tag << "] " << c->id << ": " << c->description << "\n";
            for (const std::string& line : result.lines)
                std::cout << line << "\n";
            any_failed = any_failed || result.kind == ClaimResult::Kind::fail;
        }
        if (any_failed)
            std::exit(kExitComputation);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    // The watchdog must be armed before any computation starts.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--timeout")
            start_watchdog(std::atof(argv[i + 1]));
    try {
        return run(argc, argv);
    } catch (const context_mismatch_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const validation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }
}
