#include "regjump/rank.hpp"

#include <gmpxx.h>

namespace regjump {

std::size_t rank_over_rationals(const DenseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    std::vector<mpz_class> w;
    w.reserve(m.a.size());
    for (long long v : m.a)
        w.push_back(mpz_class(static_cast<long>(v)));
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * m.cols + j]; };
    std::size_t rank = 0;
    mpz_class prev_pivot = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(at(pivot, j), at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                mpz_class t = at(i, j) * at(rank, col) - at(i, col) * at(rank, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev_pivot = at(rank, col);
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p(const DenseIntMatrix& m, std::uint32_t p) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    const std::int64_t pp = p;
    std::vector<std::int64_t> w(m.rows * m.cols);
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::int64_t v = m.a[i] % pp;
        if (v < 0)
            v += pp;
        w[i] = v;
    }
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return w[i * m.cols + j]; };
    auto inv_mod = [&](std::int64_t a) {
        // Fermat: p is prime.
        std::int64_t result = 1, base = a % pp, e = pp - 2;
        while (e > 0) {
            if (e & 1)
                result = result * base % pp;
            base = base * base % pp;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(at(pivot, j), at(rank, j));
        std::int64_t inv = inv_mod(at(rank, col));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (at(i, col) == 0)
                continue;
            std::int64_t factor = at(i, col) * inv % pp;
            for (std::size_t j = col; j < m.cols; ++j) {
                at(i, j) = (at(i, j) - factor * at(rank, j)) % pp;
                if (at(i, j) < 0)
                    at(i, j) += pp;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_over(const DenseIntMatrix& m, const FieldSpec& field) {
    if (field.is_rationals())
        return rank_over_rationals(m);
    return rank_mod_p(m, field.characteristic());
}

} // namespace regjump
