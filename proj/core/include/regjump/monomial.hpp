#ifndef REGJUMP_MONOMIAL_HPP
#define REGJUMP_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regjump/context.hpp"

namespace regjump {

using Exponent = std::int32_t;

/// Monomial as an exponent vector over a shared variable context.
/// All arithmetic is overflow-checked; wraparound is never silent.
class Monomial {
public:
    Monomial(ContextPtr context, std::vector<Exponent> exponents);

    static Monomial one(ContextPtr context);
    static Monomial variable(ContextPtr context, std::size_t index, Exponent e = 1);

    const ContextPtr& context() const { return context_; }
    const std::vector<Exponent>& exponents() const { return exponents_; }
    Exponent exponent(std::size_t i) const { return exponents_.at(i); }
    std::size_t variable_count() const { return exponents_.size(); }

    long long degree() const;
    /// Total degree restricted to the given variable indices.
    long long degree_on(const std::vector<std::size_t>& vars) const;

    bool is_one() const;
    bool is_squarefree() const;

    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact division; throws validation_error if not divisible.
    Monomial operator/(const Monomial& other) const;
    Monomial pow(Exponent k) const;

    /// The monomial colon: this / gcd(this, u).
    Monomial colon_by(const Monomial& u) const;

    /// Lex comparison with variable significance = context order
    /// (first variable largest). Returns <0, 0, >0.
    int lex_compare(const Monomial& other) const;

    bool operator==(const Monomial& other) const;
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// Human form, e.g. "x1^2*z1^3"; the identity prints as "1".
    std::string str() const;

private:
    ContextPtr context_;
    std::vector<Exponent> exponents_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Strict ordering placing lex-larger monomials first (the canonical
/// generator order).
struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.lex_compare(b) > 0;
    }
};

} // namespace regjump

#endif
