#include "regjump/betti.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

namespace regjump {

void BettiTable::add(int i, long long j, long long dim) {
    if (dim == 0)
        return;
    if (dim < 0 || i < 0)
        throw validation_error("betti entries must have nonnegative index and positive dimension");
    entries_[{i, j}] += dim;
}

long long BettiTable::entry(int i, long long j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::optional<long long> BettiTable::t(int i) const {
    std::optional<long long> best;
    for (const auto& [key, dim] : entries_)
        if (key.first == i)
            best = best ? std::max(*best, key.second) : key.second;
    return best;
}

int BettiTable::max_homological_index() const {
    int top = -1;
    for (const auto& [key, dim] : entries_)
        top = std::max(top, key.first);
    return top;
}

long long BettiTable::regularity() const {
    if (entries_.empty())
        throw computation_error("regularity of an empty Betti table");
    long long reg = std::numeric_limits<long long>::min();
    for (const auto& [key, dim] : entries_)
        reg = std::max(reg, key.second - key.first);
    return reg;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& m) {
    require_same_context(ideal.context(), m.context());
    int n = static_cast<int>(ideal.context()->size());
    // Candidate vertices are the support of m; any other variable cannot
    // divide m.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m.variable_count(); ++i)
        if (m.exponent(i) > 0)
            support.push_back(i);
    std::vector<FaceMask> faces;
    std::size_t count = support.size();
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << count); ++sub) {
        std::vector<Exponent> exps = m.exponents();
        FaceMask face = 0;
        for (std::size_t b = 0; b < count; ++b) {
            if (sub >> b & 1) {
                exps[support[b]] -= 1;
                face |= FaceMask{1} << support[b];
            }
        }
        if (ideal.contains(Monomial(m.context(), std::move(exps))))
            faces.push_back(face);
    }
    if (faces.empty())
        return SimplicialComplex::void_complex(n);
    return SimplicialComplex::from_faces(n, std::move(faces));
}

namespace {

struct LatticeHomology {
    Monomial degree;
    std::vector<long long> dims; // index k+1 = reduced H_k
};

std::vector<LatticeHomology> homology_at_lattice_degrees(const MonomialIdeal& ideal,
                                                         const FieldSpec& field,
                                                         int threads) {
    ideal.require_analyzable("betti_table");
    LcmLattice lattice = lcm_lattice(ideal);
    const auto& elems = lattice.elements();
    std::vector<LatticeHomology> results;
    results.reserve(elems.size());
    for (const Monomial& m : elems)
        results.push_back({m, {}});
    if (threads <= 0)
        threads = default_thread_count();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(elems.size())));
    // Independent per-degree computations; results land in preallocated
    // slots, so the merge is deterministic regardless of scheduling.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= elems.size())
                return;
            SimplicialComplex complex = upper_koszul_complex(ideal, elems[idx]);
            results[idx].dims = reduced_homology_dims(complex, field);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return results;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, int threads) {
    BettiTable table(field);
    for (const auto& cell : homology_at_lattice_degrees(ideal, field, threads)) {
        long long j = cell.degree.degree();
        for (std::size_t slot = 0; slot < cell.dims.size(); ++slot)
            if (cell.dims[slot] > 0)
                table.add(static_cast<int>(slot), j, cell.dims[slot]);
    }
    return table;
}

std::vector<MultigradedBettiEntry> betti_table_multigraded(const MonomialIdeal& ideal,
                                                           const FieldSpec& field,
                                                           int threads) {
    std::vector<MultigradedBettiEntry> out;
    for (const auto& cell : homology_at_lattice_degrees(ideal, field, threads))
        for (std::size_t slot = 0; slot < cell.dims.size(); ++slot)
            if (cell.dims[slot] > 0)
                out.push_back({static_cast<int>(slot), cell.degree, cell.dims[slot]});
    return out;
}

long long regularity(const MonomialIdeal& ideal, const FieldSpec& field, int threads) {
    return betti_table(ideal, field, threads).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field, int threads) {
    return regularity(ideal, field, threads) == ideal.min_generator_degree();
}

bool euler_check(const MonomialIdeal& ideal, const FieldSpec& field) {
    BettiTable table = betti_table(ideal, field);
    std::vector<long long> numerator = hilbert_numerator(ideal);
    std::map<long long, long long> alternating;
    for (const auto& [key, dim] : table.entries()) {
        long long sign = key.first % 2 == 0 ? 1 : -1;
        alternating[key.second] += sign * dim;
    }
    long long top = numerator.empty() ? 0 : static_cast<long long>(numerator.size()) - 1;
    for (const auto& [j, v] : alternating)
        top = std::max(top, j);
    for (long long j = 1; j <= top; ++j) {
        long long lhs = alternating.count(j) ? alternating[j] : 0;
        long long rhs = j < static_cast<long long>(numerator.size())
                            ? -numerator[static_cast<std::size_t>(j)]
                            : 0;
        if (lhs != rhs)
            return false;
    }
    return true;
}

int default_thread_count() {
    if (const char* env = std::getenv("REGJUMP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace regjump
