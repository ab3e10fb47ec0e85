#ifndef REGJUMP_QUOTIENTS_HPP
#define REGJUMP_QUOTIENTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "regjump/ideal.hpp"

namespace regjump {

/// A minimal generating set together with an ordering of it.
struct OrderedGenerators {
    MonomialIdeal ideal;
    std::vector<Monomial> order;
};

/// Validates that `order` is a permutation of the ideal's minimal
/// generators; throws validation_error otherwise.
OrderedGenerators make_ordered_generators(MonomialIdeal ideal, std::vector<Monomial> order);

struct QuotientStep {
    Monomial generator;
    /// Minimal generators of (f_1, ..., f_{k-1}) : f_k; empty at the
    /// first step (the zero-colon convention).
    std::vector<Monomial> colon_generators;
    bool linear; // all colon generators have degree 1
};

struct QuotientReport {
    OrderedGenerators ordered;
    std::vector<QuotientStep> steps;
    bool linear;
    /// Set when the generators do not share a single degree; the linear
    /// flag is still computed but its meaning is nonstandard then.
    bool mixed_degrees;
};

/// Step-by-step prefix colons of the given order. Purely combinatorial:
/// no field enters.
QuotientReport check_linear_quotients(const OrderedGenerators& og);

enum class SearchStatus { witness_found, exhausted, budget_exceeded };

struct SearchResult {
    SearchStatus status;
    std::optional<OrderedGenerators> witness;
    std::uint64_t nodes_expanded = 0;
};

/// Backtracking over prefixes: a generator extends a prefix only when the
/// prefix colon by it is generated by variables. Prefix sets that cannot
/// be completed are memoized, so "exhausted" is a proof of absence.
/// Single-threaded and deterministic; candidates sharing the most
/// variables with the current prefix are tried first.
SearchResult search_linear_quotients(const MonomialIdeal& ideal, std::uint64_t budget);

/// Generator order for the a-th power of Z + (x_gens), where Z is the
/// (d+1)-st power of the ideal of its support variables and every x_gen
/// has degree 1 outside those variables. Blocks are indexed by the number
/// of pure-Z factors, descending; the pure-Z block is lex-descending and
/// the mixed blocks sort by x-part lex-descending, then z-part
/// lex-descending.
OrderedGenerators block_order(const std::vector<Monomial>& x_gens,
                              const MonomialIdeal& z_power_ideal, int a);

} // namespace regjump

#endif
