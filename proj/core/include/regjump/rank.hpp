#ifndef REGJUMP_RANK_HPP
#define REGJUMP_RANK_HPP

#include <cstdint>
#include <vector>

#include "regjump/field.hpp"

namespace regjump {

/// Dense integer matrix with small entries, row-major.
struct DenseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> a;

    DenseIntMatrix() = default;
    DenseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Exact rank over the rationals by fraction-free (Bareiss) elimination
/// on arbitrary-precision integers.
std::size_t rank_over_rationals(const DenseIntMatrix& m);

/// Rank over F_p by modular Gaussian elimination, machine-word arithmetic.
std::size_t rank_mod_p(const DenseIntMatrix& m, std::uint32_t p);

std::size_t rank_over(const DenseIntMatrix& m, const FieldSpec& field);

} // namespace regjump

#endif
