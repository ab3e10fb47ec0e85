#include "regjump/rees.hpp"

#include <algorithm>

#include "regjump/families.hpp"

namespace regjump {

namespace {

/// All exponent vectors of the given total degree over `size` slots, in
/// lex-descending order.
std::vector<std::vector<int>> exponent_vectors(std::size_t size, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(size, 0);
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == size) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (size == 0)
        return out;
    recurse(recurse, 0, degree);
    return out;
}

Monomial monomial_from_exponents(const ContextPtr& ctx, const std::vector<int>& exps) {
    std::vector<Exponent> e(exps.begin(), exps.end());
    return Monomial(ctx, std::move(e));
}

/// Divisors of n in lex-ascending exponent-vector order (starting at 1).
std::vector<Monomial> divisors_ascending(const Monomial& n) {
    std::vector<Monomial> out;
    std::vector<Exponent> current(n.variable_count(), 0);
    auto recurse = [&](auto&& self, std::size_t pos) -> void {
        if (pos == current.size()) {
            out.push_back(Monomial(n.context(), current));
            return;
        }
        for (Exponent e = 0; e <= n.exponent(pos); ++e) {
            current[pos] = e;
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace

Monomial PseudoLinearInstance::phi_z(const std::vector<int>& t_exponents) const {
    Monomial result = Monomial::one(z_context);
    for (std::size_t i = 0; i < t_exponents.size(); ++i)
        if (t_exponents[i] > 0)
            result = result * m[i].pow(t_exponents[i]);
    return result;
}

Monomial PseudoLinearInstance::phi_x(const std::vector<int>& t_exponents) const {
    std::vector<Exponent> exps(x_context->size(), 0);
    for (std::size_t i = 0; i < t_exponents.size(); ++i)
        exps[phi[i]] += t_exponents[i];
    return Monomial(x_context, std::move(exps));
}

PseudoLinearInstance make_pseudo_linear_instance(ContextPtr z_context, ContextPtr x_context,
                                                 std::vector<Monomial> m,
                                                 std::vector<std::size_t> phi, int p) {
    if (m.empty())
        throw validation_error("pseudo-linear instance needs at least one monomial");
    if (phi.size() != m.size())
        throw validation_error("phi must map every t-index");
    if (p < 1)
        throw validation_error("pseudo-linear order must be at least 1");
    long long d = m.front().degree();
    for (const Monomial& mi : m) {
        require_same_context(z_context, mi.context());
        if (mi.degree() != d || d < 1)
            throw validation_error("instance monomials must share one positive degree");
    }
    for (std::size_t x : phi)
        if (x >= x_context->size())
            throw validation_error("phi image out of range");
    return PseudoLinearInstance{std::move(z_context), std::move(x_context), std::move(m),
                                std::move(phi), p};
}

PseudoLinearInstance jump_instance(int d, int p) {
    if (d < 2)
        throw validation_error("jump_instance requires d >= 2");
    ContextPtr zctx = make_context({"z1", "z2"});
    ContextPtr xctx = make_context({"x1", "x2"});
    std::vector<Monomial> m = {
        Monomial(zctx, {static_cast<Exponent>(d), 0}),
        Monomial(zctx, {0, static_cast<Exponent>(d)}),
        Monomial(zctx, {static_cast<Exponent>(d - 1), 1}),
    };
    return make_pseudo_linear_instance(zctx, xctx, std::move(m), {0, 0, 1}, p);
}

std::vector<FiberBinomial> enumerate_fiber_binomials(const PseudoLinearInstance& inst,
                                                     int a, int b) {
    if (!(1 <= b && b <= a && a <= inst.p))
        throw validation_error("enumerate_fiber_binomials requires 1 <= b <= a <= p");
    long long d = inst.degree();
    long long mn_degree = (static_cast<long long>(a) - b) * (d + 1);
    long long c_degree = mn_degree + d * b;
    std::vector<FiberBinomial> out;
    std::vector<std::vector<int>> t_monomials = exponent_vectors(inst.k(), b);
    for (const auto& A : t_monomials) {
        Monomial phiA = inst.phi_z(A);
        Monomial xA = inst.phi_x(A);
        for (const auto& B : t_monomials) {
            Monomial xB = inst.phi_x(B);
            if (xA.lex_compare(xB) <= 0)
                continue;
            Monomial phiB = inst.phi_z(B);
            Monomial base = lcm(phiA, phiB);
            long long extra = c_degree - base.degree();
            if (extra < 0)
                continue;
            for (const auto& dexp : exponent_vectors(inst.z_context->size(),
                                                     static_cast<int>(extra))) {
                Monomial common = base * monomial_from_exponents(inst.z_context, dexp);
                out.push_back(FiberBinomial{common / phiA, common / phiB, A, B, a, b});
            }
        }
    }
    return out;
}

std::optional<PseudoLinearWitness> witness_exists(const PseudoLinearInstance& inst,
                                                  const FiberBinomial& fb) {
    Monomial xA = inst.phi_x(fb.A);
    Monomial xB = inst.phi_x(fb.B);
    Monomial quotient = xA / gcd(xA, xB); // phi(A)/gcd(phi(A), phi(B))
    for (std::size_t i = 0; i < inst.k(); ++i) {
        if (fb.A[i] < 1)
            continue;
        Monomial xi = Monomial::variable(inst.x_context, inst.phi[i]);
        if (!xi.divides(quotient))
            continue;
        for (std::size_t j = 0; j < inst.k(); ++j) {
            if (fb.B[j] < 1)
                continue;
            Monomial xj = Monomial::variable(inst.x_context, inst.phi[j]);
            if (xi.lex_compare(xj) <= 0)
                continue;
            for (const Monomial& n1 : divisors_ascending(fb.N)) {
                // M1 t_i - N1 t_j lies in the kernel iff M1 m_i = N1 m_j.
                Monomial product = n1 * inst.m[j];
                if (!inst.m[i].divides(product))
                    continue;
                return PseudoLinearWitness{i, j, n1, product / inst.m[i]};
            }
        }
    }
    return std::nullopt;
}

PseudoLinearVerdict verify_pseudo_linear(const PseudoLinearInstance& inst) {
    PseudoLinearVerdict verdict;
    for (int a = 1; a <= inst.p; ++a) {
        for (int b = 1; b <= a; ++b) {
            for (const FiberBinomial& fb : enumerate_fiber_binomials(inst, a, b)) {
                ++verdict.binomials_checked;
                if (!witness_exists(inst, fb)) {
                    verdict.pseudo_linear = false;
                    verdict.counterexample = fb;
                    return verdict;
                }
            }
        }
    }
    verdict.pseudo_linear = true;
    return verdict;
}

MonomialIdeal instance_ideal(const PseudoLinearInstance& inst) {
    std::vector<std::string> names = inst.x_context->names();
    for (const std::string& z : inst.z_context->names())
        names.push_back(z);
    ContextPtr ctx = make_context(std::move(names));
    std::size_t xcount = inst.x_context->size();
    auto embed_z = [&](const Monomial& zm) {
        std::vector<Exponent> exps(ctx->size(), 0);
        for (std::size_t v = 0; v < zm.variable_count(); ++v)
            exps[xcount + v] = zm.exponent(v);
        return Monomial(ctx, std::move(exps));
    };
    std::vector<Monomial> gens;
    long long d = inst.degree();
    for (const auto& exps : exponent_vectors(inst.z_context->size(), static_cast<int>(d) + 1))
        gens.push_back(embed_z(monomial_from_exponents(inst.z_context, exps)));
    for (std::size_t i = 0; i < inst.k(); ++i) {
        Monomial g = embed_z(inst.m[i]);
        std::vector<Exponent> exps = g.exponents();
        exps[inst.phi[i]] += 1;
        gens.push_back(Monomial(ctx, std::move(exps)));
    }
    return MonomialIdeal::minimal_generators(gens);
}

SyzygyCertificate syzygy_certificate(int d, std::optional<bool> betti_crosscheck) {
    if (d < 2)
        throw validation_error("syzygy_certificate requires d >= 2");
    SyzygyCertificate cert;
    cert.d = d;
    cert.syzygy_degree = static_cast<long long>(d) * (d + 1) + d;
    cert.regularity_lower_bound = cert.syzygy_degree - 1;

    MonomialIdeal J = family_J(d);
    MonomialIdeal Jd = power(J, d);
    const ContextPtr& ctx = J.context(); // (x1, x2, z1, z2)
    Monomial u(ctx, {0, static_cast<Exponent>(d), static_cast<Exponent>(d * (d - 1)),
                     static_cast<Exponent>(d)});
    std::vector<Monomial> rest;
    bool found = false;
    for (const Monomial& g : Jd.generators()) {
        if (g == u)
            found = true;
        else
            rest.push_back(g);
    }
    if (!found)
        throw computation_error("syzygy_certificate: u is not a minimal generator of J^d");
    MonomialIdeal V = MonomialIdeal::minimal_generators(rest);
    MonomialIdeal Vu = colon(V, u);

    Monomial x1d = Monomial::variable(ctx, 0, static_cast<Exponent>(d));
    cert.x_power_in_colon = Vu.contains(x1d);
    cert.no_smaller_power = true;
    for (int s = 1; s < d; ++s)
        if (Vu.contains(Monomial::variable(ctx, 0, static_cast<Exponent>(s))))
            cert.no_smaller_power = false;
    cert.x_power_is_minimal = std::find(Vu.generators().begin(), Vu.generators().end(), x1d) !=
                              Vu.generators().end();
    cert.holds = cert.x_power_in_colon && cert.no_smaller_power && cert.x_power_is_minimal;

    bool do_crosscheck = betti_crosscheck.value_or(d <= 3);
    if (do_crosscheck) {
        BettiTable table = betti_table(Jd, FieldSpec::rationals());
        cert.betti_first_syzygies = table.entry(1, cert.syzygy_degree);
    }
    return cert;
}

} // namespace regjump
