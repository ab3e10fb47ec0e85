#include "regjump/quotients.hpp"

#include <algorithm>
#include <unordered_set>

namespace regjump {

OrderedGenerators make_ordered_generators(MonomialIdeal ideal, std::vector<Monomial> order) {
    ideal.require_analyzable("ordered generators");
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), LexDescending{});
    if (sorted != ideal.generators())
        throw validation_error("order is not a permutation of the minimal generators");
    return OrderedGenerators{std::move(ideal), std::move(order)};
}

namespace {

/// Minimal generators of (f_1,...,f_{k-1}) : f_k given the prefix.
std::vector<Monomial> prefix_colon(const std::vector<Monomial>& prefix, const Monomial& g) {
    std::vector<Monomial> quotients;
    quotients.reserve(prefix.size());
    for (const Monomial& f : prefix)
        quotients.push_back(f.colon_by(g));
    if (quotients.empty())
        return {};
    return MonomialIdeal::minimal_generators(quotients).generators();
}

bool all_linear(const std::vector<Monomial>& gens) {
    for (const Monomial& m : gens)
        if (m.degree() != 1)
            return false;
    return true;
}

} // namespace

QuotientReport check_linear_quotients(const OrderedGenerators& og) {
    QuotientReport report{og, {}, true, false};
    report.mixed_degrees = !og.ideal.generated_in_single_degree();
    std::vector<Monomial> prefix;
    prefix.reserve(og.order.size());
    for (const Monomial& g : og.order) {
        QuotientStep step{g, prefix_colon(prefix, g), true};
        step.linear = all_linear(step.colon_generators);
        report.linear = report.linear && step.linear;
        report.steps.push_back(std::move(step));
        prefix.push_back(g);
    }
    return report;
}

namespace {

/// Generator subsets as dynamic bitmaps, so ideals with many generators
/// still search (they simply exhaust their budget sooner).
using SetKey = std::vector<std::uint64_t>;

struct SetKeyHash {
    std::size_t operator()(const SetKey& key) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : key) {
            h ^= w + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct SearchState {
    const std::vector<Monomial>* gens;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::unordered_set<SetKey, SetKeyHash> dead_sets; // not completable
    std::vector<std::size_t> witness;

    bool dfs(SetKey& mask, std::vector<std::size_t>& prefix_idx,
             std::vector<Monomial>& prefix) {
        const auto& g = *gens;
        if (prefix.size() == g.size()) {
            witness = prefix_idx;
            return true;
        }
        if (nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        ++nodes;
        // Candidates that keep the next colon variable-generated, tried
        // most-shared-support first.
        std::vector<std::pair<long long, std::size_t>> candidates;
        std::uint64_t prefix_support = 0;
        for (const Monomial& f : prefix)
            for (std::size_t v = 0; v < f.variable_count(); ++v)
                if (f.exponent(v) > 0)
                    prefix_support |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (mask[i / 64] >> (i % 64) & 1)
                continue;
            if (!all_linear(prefix_colon(prefix, g[i])))
                continue;
            long long shared = 0;
            for (std::size_t v = 0; v < g[i].variable_count(); ++v)
                if (g[i].exponent(v) > 0 && (prefix_support >> v & 1))
                    ++shared;
            candidates.push_back({-shared, i});
        }
        std::stable_sort(candidates.begin(), candidates.end());
        for (auto [neg_shared, i] : candidates) {
            mask[i / 64] |= std::uint64_t{1} << (i % 64);
            if (!dead_sets.count(mask)) {
                prefix_idx.push_back(i);
                prefix.push_back(g[i]);
                if (dfs(mask, prefix_idx, prefix))
                    return true;
                prefix_idx.pop_back();
                prefix.pop_back();
                if (out_of_budget) {
                    mask[i / 64] &= ~(std::uint64_t{1} << (i % 64));
                    return false;
                }
                dead_sets.insert(mask);
            }
            mask[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
        return false;
    }
};

} // namespace

SearchResult search_linear_quotients(const MonomialIdeal& ideal, std::uint64_t budget) {
    ideal.require_analyzable("search_linear_quotients");
    if (budget == 0)
        throw validation_error("search budget must be positive");
    if (ideal.context()->size() > 64)
        throw size_error("search_linear_quotients supports at most 64 variables");
    SearchState state;
    state.gens = &ideal.generators();
    state.budget = budget;
    std::vector<std::size_t> prefix_idx;
    std::vector<Monomial> prefix;
    SetKey mask((ideal.generator_count() + 63) / 64, 0);
    bool found = state.dfs(mask, prefix_idx, prefix);
    SearchResult result{SearchStatus::exhausted, std::nullopt, state.nodes};
    if (found) {
        std::vector<Monomial> order;
        for (std::size_t i : state.witness)
            order.push_back(ideal.generators()[i]);
        result.status = SearchStatus::witness_found;
        result.witness = make_ordered_generators(ideal, std::move(order));
    } else if (state.out_of_budget) {
        result.status = SearchStatus::budget_exceeded;
    }
    return result;
}

namespace {

int restricted_lex_compare(const Monomial& a, const Monomial& b,
                           const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars) {
        if (a.exponent(v) != b.exponent(v))
            return a.exponent(v) < b.exponent(v) ? -1 : 1;
    }
    return 0;
}

} // namespace

OrderedGenerators block_order(const std::vector<Monomial>& x_gens,
                              const MonomialIdeal& z_power_ideal, int a) {
    if (a < 1)
        throw validation_error("block_order: power must be at least 1");
    z_power_ideal.require_analyzable("block_order");
    const ContextPtr& ctx = z_power_ideal.context();
    for (const Monomial& g : x_gens)
        require_same_context(ctx, g.context());
    if (x_gens.empty())
        throw validation_error("block_order: no mixed generators given");

    // Classify variables by the support of the pure part.
    std::vector<std::size_t> z_vars, x_vars;
    {
        std::vector<char> is_z(ctx->size(), 0);
        for (const Monomial& g : z_power_ideal.generators())
            for (std::size_t v = 0; v < ctx->size(); ++v)
                if (g.exponent(v) > 0)
                    is_z[v] = 1;
        for (std::size_t v = 0; v < ctx->size(); ++v)
            (is_z[v] ? z_vars : x_vars).push_back(v);
    }
    if (!z_power_ideal.generated_in_single_degree())
        throw validation_error("block_order: pure block is not generated in a single degree");
    long long D = z_power_ideal.max_generator_degree();
    if (D < 2)
        throw validation_error("block_order: pure block must have degree at least 2");
    {
        std::vector<Monomial> vars;
        for (std::size_t v : z_vars)
            vars.push_back(Monomial::variable(ctx, v));
        MonomialIdeal expected = power(MonomialIdeal::minimal_generators(vars),
                                       static_cast<int>(D));
        if (expected != z_power_ideal)
            throw validation_error("block_order: pure block is not a power of its variables");
    }
    for (const Monomial& g : x_gens) {
        if (g.degree_on(x_vars) != 1 || g.degree_on(z_vars) != D - 1)
            throw validation_error("block_order: mixed generator " + g.str() +
                                   " does not have x-degree 1 and z-degree " +
                                   std::to_string(D - 1));
    }

    std::vector<Monomial> all = z_power_ideal.generators();
    all.insert(all.end(), x_gens.begin(), x_gens.end());
    MonomialIdeal whole = MonomialIdeal::minimal_generators(all);
    MonomialIdeal target = power(whole, a);

    // Block ideals Z^b I^{a-b}; membership determines the block, largest
    // b first.
    MonomialIdeal mixed = MonomialIdeal::minimal_generators(x_gens);
    std::vector<MonomialIdeal> blocks;
    for (int b = 0; b <= a; ++b) {
        MonomialIdeal part = b == 0 ? power(mixed, a)
                                    : (b == a ? power(z_power_ideal, a)
                                              : multiply(power(z_power_ideal, b),
                                                         power(mixed, a - b)));
        blocks.push_back(std::move(part));
    }
    struct Keyed {
        int block;
        Monomial m;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(target.generator_count());
    for (const Monomial& u : target.generators()) {
        int b = -1;
        for (int cand = a; cand >= 0; --cand) {
            if (blocks[static_cast<std::size_t>(cand)].contains(u)) {
                b = cand;
                break;
            }
        }
        if (b < 0)
            throw computation_error("block_order: generator escapes the block decomposition");
        keyed.push_back({b, u});
    }
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& lhs, const Keyed& rhs) {
        if (lhs.block != rhs.block)
            return lhs.block > rhs.block;
        if (lhs.block == a)
            return lhs.m.lex_compare(rhs.m) > 0;
        int cx = restricted_lex_compare(lhs.m, rhs.m, x_vars);
        if (cx != 0)
            return cx > 0;
        return restricted_lex_compare(lhs.m, rhs.m, z_vars) > 0;
    });
    std::vector<Monomial> order;
    order.reserve(keyed.size());
    for (const Keyed& k : keyed)
        order.push_back(k.m);
    return make_ordered_generators(std::move(target), std::move(order));
}

} // namespace regjump
