#include "regjump/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace regjump {

namespace {

struct ExpVecHash {
    std::size_t operator()(const std::vector<Exponent>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Exponent e : v) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    // Dedup first, then drop anything divisible by a different survivor.
    std::sort(gens.begin(), gens.end(), LexDescending{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]))
                redundant = true;
        if (!redundant)
            kept.push_back(gens[i]);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(ContextPtr context, std::vector<Monomial> gens, bool unit, bool zero)
    : context_(std::move(context)), generators_(std::move(gens)), unit_(unit), zero_(zero) {}

MonomialIdeal MonomialIdeal::minimal_generators(const std::vector<Monomial>& monomials) {
    if (monomials.empty())
        throw validation_error("minimal_generators: empty input");
    const ContextPtr& ctx = monomials.front().context();
    for (const Monomial& m : monomials) {
        require_same_context(ctx, m.context());
        if (m.is_one())
            throw validation_error("minimal_generators: the identity monomial generates the unit ideal");
    }
    return MonomialIdeal(ctx, minimalize(monomials), false, false);
}

MonomialIdeal MonomialIdeal::unit(ContextPtr context) {
    return MonomialIdeal(std::move(context), {}, true, false);
}

MonomialIdeal MonomialIdeal::zero(ContextPtr context) {
    return MonomialIdeal(std::move(context), {}, false, true);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    require_same_context(context_, m.context());
    if (unit_)
        return true;
    for (const Monomial& g : generators_)
        if (g.divides(m))
            return true;
    return false;
}

long long MonomialIdeal::max_generator_degree() const {
    require_analyzable("max_generator_degree");
    long long d = 0;
    for (const Monomial& g : generators_)
        d = std::max(d, g.degree());
    return d;
}

long long MonomialIdeal::min_generator_degree() const {
    require_analyzable("min_generator_degree");
    long long d = generators_.front().degree();
    for (const Monomial& g : generators_)
        d = std::min(d, g.degree());
    return d;
}

bool MonomialIdeal::generated_in_single_degree() const {
    return max_generator_degree() == min_generator_degree();
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return same_context(context_, other.context_) && unit_ == other.unit_ &&
           zero_ == other.zero_ && generators_ == other.generators_;
}

void MonomialIdeal::require_analyzable(const char* op) const {
    if (unit_)
        throw validation_error(std::string(op) + ": the unit ideal is not analyzable");
    if (zero_)
        throw validation_error(std::string(op) + ": the zero ideal is not analyzable");
    if (generators_.empty())
        throw validation_error(std::string(op) + ": empty generator set");
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_context(a.context(), b.context());
    a.require_analyzable("multiply");
    b.require_analyzable("multiply");
    std::vector<Monomial> products;
    products.reserve(a.generator_count() * b.generator_count());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators())
            products.push_back(f * g);
    return MonomialIdeal::minimal_generators(products);
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1)
        throw validation_error("power: exponent must be at least 1");
    ideal.require_analyzable("power");
    MonomialIdeal result = ideal;
    for (int i = 1; i < k; ++i)
        result = multiply(result, ideal);
    return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
    require_same_context(ideal.context(), u.context());
    ideal.require_analyzable("colon");
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.generator_count());
    bool saw_one = false;
    for (const Monomial& f : ideal.generators()) {
        Monomial q = f.colon_by(u);
        if (q.is_one())
            saw_one = true;
        else
            quotients.push_back(q);
    }
    if (saw_one)
        return MonomialIdeal::unit(ideal.context());
    return MonomialIdeal::minimal_generators(quotients);
}

LcmLattice::LcmLattice(MonomialIdeal source, std::vector<Monomial> elements)
    : source_(std::move(source)), elements_(std::move(elements)) {}

bool LcmLattice::contains(const Monomial& m) const {
    for (const Monomial& e : elements_)
        if (e == m)
            return true;
    return false;
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
    ideal.require_analyzable("lcm_lattice");
    // The join-closure is generated by joins with single generators, so a
    // worklist of (element, generator) joins reaches everything.
    std::unordered_set<std::vector<Exponent>, ExpVecHash> seen;
    std::vector<Monomial> elements;
    std::vector<std::size_t> frontier;
    for (const Monomial& g : ideal.generators()) {
        if (seen.insert(g.exponents()).second) {
            frontier.push_back(elements.size());
            elements.push_back(g);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            Monomial current = elements[idx];
            for (const Monomial& g : ideal.generators()) {
                Monomial join = lcm(current, g);
                if (seen.insert(join.exponents()).second) {
                    next.push_back(elements.size());
                    elements.push_back(std::move(join));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(elements.begin(), elements.end(), [](const Monomial& a, const Monomial& b) {
        long long da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return a.lex_compare(b) > 0;
    });
    return LcmLattice(ideal, std::move(elements));
}

Monomial rename_variables(const Monomial& m, const VariableBijection& map, const ContextPtr& target) {
    if (map.size() != m.variable_count() || target->size() != m.variable_count())
        throw validation_error("rename_variables: bijection length mismatch");
    std::vector<Exponent> exps(m.variable_count(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] >= exps.size())
            throw validation_error("rename_variables: image index out of range");
        exps[map[i]] = m.exponent(i);
    }
    return Monomial(target, std::move(exps));
}

namespace {

bool bijection_matches(const MonomialIdeal& a, const MonomialIdeal& b, const VariableBijection& map) {
    std::vector<Monomial> image;
    image.reserve(a.generator_count());
    for (const Monomial& g : a.generators())
        image.push_back(rename_variables(g, map, b.context()));
    std::sort(image.begin(), image.end(), LexDescending{});
    return image == b.generators();
}

} // namespace

std::optional<VariableBijection> iso_under_renaming(
    const MonomialIdeal& a, const MonomialIdeal& b,
    const std::optional<VariableBijection>& given) {
    a.require_analyzable("iso_under_renaming");
    b.require_analyzable("iso_under_renaming");
    std::size_t n = a.context()->size();
    if (n != b.context()->size())
        throw validation_error("iso_under_renaming: variable counts differ");
    if (given) {
        VariableBijection map = *given;
        if (map.size() != n)
            throw validation_error("iso_under_renaming: bijection length mismatch");
        std::vector<bool> hit(n, false);
        for (std::size_t i : map) {
            if (i >= n || hit[i])
                throw validation_error("iso_under_renaming: map is not a bijection");
            hit[i] = true;
        }
        if (bijection_matches(a, b, map))
            return map;
        return std::nullopt;
    }
    if (a.generator_count() != b.generator_count())
        return std::nullopt;
    if (n > 8)
        throw size_error("iso_under_renaming: search capped at 8 variables; supply the map");
    VariableBijection perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (bijection_matches(a, b, perm))
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

std::vector<long long> hilbert_by_inclusion_exclusion(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::size_t s = gens.size();
    std::map<long long, long long> coeffs;
    coeffs[0] += 1;
    // Depth-first over subsets, carrying the running lcm and sign.
    auto recurse = [&](auto&& self, std::size_t next, const Monomial& current, int sign) -> void {
        for (std::size_t i = next; i < s; ++i) {
            Monomial join = lcm(current, gens[i]);
            coeffs[join.degree()] += -sign;
            self(self, i + 1, join, -sign);
        }
    };
    for (std::size_t i = 0; i < s; ++i) {
        coeffs[gens[i].degree()] += -1;
        recurse(recurse, i + 1, gens[i], -1);
    }
    long long top = coeffs.rbegin()->first;
    std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
    for (auto& [deg, c] : coeffs)
        out[static_cast<std::size_t>(deg)] = c;
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

std::vector<long long> hilbert_by_moebius(const LcmLattice& lattice) {
    // Moebius values mu(bottom, m) on the lattice with the identity
    // adjoined as bottom; the numerator is 1 + sum mu(bottom, m) t^deg(m).
    const auto& elems = lattice.elements(); // degree-ascending, so divisors precede multiples
    std::size_t n = elems.size();
    std::vector<long long> mu(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        long long acc = -1; // mu(bottom, bottom) = 1, negated
        for (std::size_t j = 0; j < i; ++j)
            if (elems[j].divides(elems[i]))
                acc -= mu[j];
        mu[i] = acc;
    }
    long long top = 0;
    for (const Monomial& m : elems)
        top = std::max(top, m.degree());
    std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
    out[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(elems[i].degree())] += mu[i];
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

} // namespace

namespace detail {

std::vector<long long> hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal) {
    ideal.require_analyzable("hilbert_numerator");
    if (ideal.generator_count() > 30)
        throw size_error("inclusion-exclusion over more than 2^30 subsets");
    return hilbert_by_inclusion_exclusion(ideal);
}

std::vector<long long> hilbert_numerator_moebius(const MonomialIdeal& ideal) {
    ideal.require_analyzable("hilbert_numerator");
    return hilbert_by_moebius(lcm_lattice(ideal));
}

} // namespace detail

std::vector<long long> hilbert_numerator(const MonomialIdeal& ideal) {
    ideal.require_analyzable("hilbert_numerator");
    std::size_t s = ideal.generator_count();
    LcmLattice lattice = lcm_lattice(ideal);
    // Subset enumeration costs 2^s joins, the Moebius recursion costs
    // |lattice|^2 divisibility tests; take the cheaper exact route.
    bool subsets_cheaper =
        s < 30 && (std::size_t{1} << s) < lattice.size() * lattice.size();
    if (subsets_cheaper)
        return hilbert_by_inclusion_exclusion(ideal);
    return hilbert_by_moebius(lattice);
}

} // namespace regjump
