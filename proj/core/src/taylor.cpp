#include "regjump/taylor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>

namespace regjump {

namespace {

constexpr std::size_t kMaxGenerators = 24;
constexpr std::size_t kMaxVariables = 8;
constexpr Exponent kMaxPackedExponent = 255;

std::uint64_t pack_exponents(const std::vector<Exponent>& exps) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        key |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    return key;
}

std::uint64_t packed_join(std::uint64_t a, std::uint64_t b, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t lane_a = (a >> (8 * i)) & 0xff;
        std::uint64_t lane_b = (b >> (8 * i)) & 0xff;
        out |= std::max(lane_a, lane_b) << (8 * i);
    }
    return out;
}

/// One multidegree strand: the subsets with this exact lcm, sorted by
/// cardinality then mask value. card_begin[k] is the first index of
/// cardinality k.
struct StrandCells {
    std::vector<std::uint32_t> masks;
    std::vector<std::size_t> card_begin; // size s + 2

    int find(std::uint32_t mask) const {
        int k = std::popcount(mask);
        auto first = masks.begin() + card_begin[k];
        auto last = masks.begin() + card_begin[k + 1];
        auto it = std::lower_bound(first, last, mask);
        if (it == last || *it != mask)
            return -1;
        return static_cast<int>(it - masks.begin());
    }
};

StrandCells make_strand(std::vector<std::uint32_t> masks, std::size_t s) {
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        return a < b;
    });
    StrandCells cells;
    cells.masks = std::move(masks);
    cells.card_begin.assign(s + 2, 0);
    for (std::uint32_t m : cells.masks)
        ++cells.card_begin[std::popcount(m) + 1];
    for (std::size_t k = 1; k < cells.card_begin.size(); ++k)
        cells.card_begin[k] += cells.card_begin[k - 1];
    return cells;
}

/// Signed boundary column of cell `mask` within its strand: one entry per
/// removable generator, with the usual alternating simplicial sign.
template <typename EmitFn>
void emit_boundary(const StrandCells& cells, std::uint32_t mask, EmitFn&& emit) {
    int sign = 1;
    std::uint32_t rest = mask;
    while (rest) {
        std::uint32_t bit = rest & (~rest + 1);
        int row = cells.find(mask ^ bit);
        if (row >= 0)
            emit(static_cast<std::uint32_t>(row), sign);
        sign = -sign;
        rest ^= bit;
    }
}

struct RationalOps {
    using Coeff = long long;
    bool is_unit(Coeff c) const { return c == 1 || c == -1; }
    bool is_zero(Coeff c) const { return c == 0; }
    Coeff from_sign(int s) const { return s; }
    Coeff div_unit(Coeff c, Coeff u) const { return u == 1 ? c : -c; }
    Coeff sub_mul(Coeff a, Coeff f, Coeff b) const {
        Coeff t, r;
        if (__builtin_mul_overflow(f, b, &t) || __builtin_sub_overflow(a, t, &r))
            throw computation_error("taylor strand reduction: integer overflow");
        return r;
    }
    long long to_int(Coeff c) const { return c; }
};

struct FpOps {
    std::uint64_t p;
    using Coeff = std::uint32_t;
    bool is_unit(Coeff c) const { return c != 0; }
    bool is_zero(Coeff c) const { return c == 0; }
    Coeff from_sign(int s) const { return s == 1 ? 1u : static_cast<Coeff>(p - 1); }
    Coeff inv(Coeff a) const {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<Coeff>(result);
    }
    Coeff div_unit(Coeff c, Coeff u) const {
        return static_cast<Coeff>(static_cast<std::uint64_t>(c) * inv(u) % p);
    }
    Coeff sub_mul(Coeff a, Coeff f, Coeff b) const {
        std::uint64_t t = static_cast<std::uint64_t>(f) * b % p;
        return static_cast<Coeff>((a + p - t) % p);
    }
    long long to_int(Coeff c) const { return static_cast<long long>(c); }
};

/// cells_k - rank d_k - rank d_{k+1} for every cardinality k, dense exact
/// rank on the strand boundary blocks.
std::vector<long long> strand_homology_dense(const StrandCells& cells, const FieldSpec& field,
                                             std::size_t s) {
    std::vector<long long> h(s + 1, 0);
    std::vector<std::size_t> rank(s + 2, 0);
    for (std::size_t k = 1; k <= s; ++k) {
        std::size_t cols = cells.card_begin[k + 1] - cells.card_begin[k];
        std::size_t rows = cells.card_begin[k] - cells.card_begin[k - 1];
        if (cols == 0 || rows == 0)
            continue;
        DenseIntMatrix m(rows, cols);
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint32_t mask = cells.masks[cells.card_begin[k] + c];
            emit_boundary(cells, mask, [&](std::uint32_t row, int sign) {
                m.at(row - cells.card_begin[k - 1], c) = sign;
            });
        }
        rank[k] = rank_over(m, field);
    }
    for (std::size_t k = 1; k <= s; ++k) {
        long long count = static_cast<long long>(cells.card_begin[k + 1] - cells.card_begin[k]);
        h[k] = count - static_cast<long long>(rank[k]) - static_cast<long long>(rank[k + 1]);
    }
    return h;
}

/// Gaussian cancellation on the strand chain complex: repeatedly quotient
/// by the acyclic subcomplex spanned by a cell and a unit entry of its
/// boundary. Columns that never acquire a unit entry are ranked densely
/// at the end. Exact over the field; deterministic.
template <class Ops>
std::vector<long long> strand_homology_sparse(const StrandCells& cells, const Ops& ops,
                                              const FieldSpec& field, std::size_t s) {
    using Coeff = typename Ops::Coeff;
    using Entry = std::pair<std::uint32_t, Coeff>;
    const std::size_t n = cells.masks.size();
    std::vector<std::vector<Entry>> col(n);
    std::vector<std::vector<std::uint32_t>> cofaces(n);
    for (std::size_t c = 0; c < n; ++c) {
        emit_boundary(cells, cells.masks[c], [&](std::uint32_t row, int sign) {
            col[c].push_back({row, ops.from_sign(sign)});
            cofaces[row].push_back(static_cast<std::uint32_t>(c));
        });
        std::sort(col[c].begin(), col[c].end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
    }
    std::vector<char> alive(n, 1);
    using QueueItem = std::pair<std::size_t, std::uint32_t>; // (nnz, column)
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
    for (std::size_t c = 0; c < n; ++c)
        if (!col[c].empty())
            queue.push({col[c].size(), static_cast<std::uint32_t>(c)});

    auto find_entry = [&](std::uint32_t c, std::uint32_t row) -> Coeff* {
        auto& v = col[c];
        auto it = std::lower_bound(v.begin(), v.end(), row,
                                   [](const Entry& e, std::uint32_t r) { return e.first < r; });
        if (it == v.end() || it->first != row)
            return nullptr;
        return &it->second;
    };

    std::vector<Entry> merged;
    while (!queue.empty()) {
        auto [nnz, v] = queue.top();
        queue.pop();
        if (!alive[v] || col[v].size() != nnz || col[v].empty())
            continue; // stale
        // Unit pivot with the shortest coface list.
        std::uint32_t w = 0;
        Coeff u{};
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const Entry& e : col[v]) {
            if (ops.is_unit(e.second) && cofaces[e.first].size() < best) {
                best = cofaces[e.first].size();
                w = e.first;
                u = e.second;
            }
        }
        if (best == std::numeric_limits<std::size_t>::max())
            continue; // no unit entry; joins the residual
        alive[v] = 0;
        alive[w] = 0;
        std::vector<Entry> pivot_col = std::move(col[v]);
        col[v].clear();
        col[w].clear();
        for (std::uint32_t x : cofaces[w]) {
            if (!alive[x])
                continue;
            Coeff* cx = find_entry(x, w);
            if (cx == nullptr || ops.is_zero(*cx))
                continue;
            Coeff factor = ops.div_unit(*cx, u);
            // col[x] -= factor * pivot_col; the w entries cancel exactly.
            merged.clear();
            merged.reserve(col[x].size() + pivot_col.size());
            auto a = col[x].begin(), ae = col[x].end();
            auto b = pivot_col.begin(), be = pivot_col.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    Coeff val = ops.sub_mul(Coeff{}, factor, b->second);
                    if (!ops.is_zero(val)) {
                        merged.push_back({b->first, val});
                        cofaces[b->first].push_back(x);
                    }
                    ++b;
                } else {
                    Coeff val = ops.sub_mul(a->second, factor, b->second);
                    if (!ops.is_zero(val))
                        merged.push_back({a->first, val});
                    ++a;
                    ++b;
                }
            }
            col[x].swap(merged);
            if (!col[x].empty())
                queue.push({col[x].size(), x});
        }
        // v dies as a row: entries above it vanish without correction.
        for (std::uint32_t y : cofaces[v]) {
            if (!alive[y])
                continue;
            auto& vy = col[y];
            auto it = std::lower_bound(vy.begin(), vy.end(), v,
                                       [](const Entry& e, std::uint32_t r) { return e.first < r; });
            if (it != vy.end() && it->first == v) {
                vy.erase(it);
                if (!vy.empty())
                    queue.push({vy.size(), y});
            }
        }
        cofaces[v].clear();
        cofaces[w].clear();
    }

    // Residual: alive cells, possibly with non-unit differentials left
    // (rationals only). Rank the remaining blocks densely.
    std::vector<long long> alive_count(s + 1, 0);
    std::vector<std::uint32_t> residual_index(n, 0);
    std::vector<std::vector<std::uint32_t>> residual_cells(s + 1);
    bool any_entries = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (!alive[c])
            continue;
        int k = std::popcount(cells.masks[c]);
        alive_count[k] += 1;
        residual_index[c] = static_cast<std::uint32_t>(residual_cells[k].size());
        residual_cells[k].push_back(static_cast<std::uint32_t>(c));
        if (!col[c].empty())
            any_entries = true;
    }
    std::vector<long long> h(s + 1, 0);
    if (!any_entries) {
        for (std::size_t k = 1; k <= s; ++k)
            h[k] = alive_count[k];
        return h;
    }
    constexpr std::size_t kResidualCap = 4096;
    std::vector<std::size_t> rank(s + 2, 0);
    for (std::size_t k = 1; k <= s; ++k) {
        std::size_t rows = residual_cells[k - 1].size();
        std::size_t colsn = residual_cells[k].size();
        if (rows == 0 || colsn == 0)
            continue;
        bool block_empty = true;
        for (std::uint32_t c : residual_cells[k])
            if (!col[c].empty())
                block_empty = false;
        if (block_empty)
            continue;
        if (rows > kResidualCap || colsn > kResidualCap)
            throw computation_error("taylor strand reduction: residual block too large");
        DenseIntMatrix m(rows, colsn);
        for (std::size_t j = 0; j < colsn; ++j)
            for (const Entry& e : col[residual_cells[k][j]])
                m.at(residual_index[e.first], j) = ops.to_int(e.second);
        rank[k] = rank_over(m, field);
    }
    for (std::size_t k = 1; k <= s; ++k)
        h[k] = alive_count[k] - static_cast<long long>(rank[k]) -
               static_cast<long long>(rank[k + 1]);
    return h;
}

} // namespace

namespace detail {

BettiTable taylor_betti_oracle_impl(const MonomialIdeal& ideal, const FieldSpec& field,
                                    std::size_t dense_cell_cap) {
    ideal.require_analyzable("taylor_betti_oracle");
    const auto& gens = ideal.generators();
    std::size_t s = gens.size();
    std::size_t nvars = ideal.context()->size();
    if (s > kMaxGenerators)
        throw size_error("taylor_betti_oracle: more than " + std::to_string(kMaxGenerators) +
                         " generators");
    if (nvars > kMaxVariables)
        throw size_error("taylor_betti_oracle: more than 8 variables");
    Monomial top = gens.front();
    for (const Monomial& g : gens)
        top = lcm(top, g);
    for (Exponent e : top.exponents())
        if (e > kMaxPackedExponent)
            throw size_error("taylor_betti_oracle: exponent exceeds 255");

    std::vector<std::uint64_t> packed(s);
    for (std::size_t i = 0; i < s; ++i)
        packed[i] = pack_exponents(gens[i].exponents());

    // Every nonempty generator subset, bucketed by the packed lcm.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> strands;
    strands.reserve(1024);
    auto enumerate = [&](auto&& self, std::size_t next, std::uint64_t current,
                         std::uint32_t mask) -> void {
        for (std::size_t i = next; i < s; ++i) {
            std::uint64_t join = packed_join(current, packed[i], nvars);
            std::uint32_t sub = mask | (std::uint32_t{1} << i);
            strands[join].push_back(sub);
            self(self, i + 1, join, sub);
        }
    };
    enumerate(enumerate, 0, 0, 0);

    LcmLattice lattice = lcm_lattice(ideal);
    if (lattice.size() != strands.size())
        throw computation_error("taylor_betti_oracle: strand keys disagree with the lcm lattice");

    BettiTable table(field);
    for (const Monomial& m : lattice.elements()) {
        auto it = strands.find(pack_exponents(m.exponents()));
        if (it == strands.end())
            throw computation_error("taylor_betti_oracle: missing strand for a lattice degree");
        StrandCells cells = make_strand(std::move(it->second), s);
        std::vector<long long> h;
        if (cells.masks.size() <= dense_cell_cap) {
            h = strand_homology_dense(cells, field, s);
        } else if (field.is_rationals()) {
            h = strand_homology_sparse(cells, RationalOps{}, field, s);
        } else {
            h = strand_homology_sparse(cells, FpOps{field.characteristic()}, field, s);
        }
        long long j = m.degree();
        for (std::size_t k = 1; k <= s; ++k) {
            if (h[k] < 0)
                throw computation_error("taylor_betti_oracle: negative homology dimension");
            if (h[k] > 0)
                table.add(static_cast<int>(k) - 1, j, h[k]);
        }
    }
    return table;
}

} // namespace detail

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field) {
    return detail::taylor_betti_oracle_impl(ideal, field, 512);
}

} // namespace regjump
