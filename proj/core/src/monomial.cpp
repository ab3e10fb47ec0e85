#include "regjump/monomial.hpp"

#include <limits>
#include <sstream>

namespace regjump {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r))
        throw exponent_overflow_error("exponent addition overflow");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw exponent_overflow_error("exponent multiplication overflow");
    return r;
}

} // namespace

Monomial::Monomial(ContextPtr context, std::vector<Exponent> exponents)
    : context_(std::move(context)), exponents_(std::move(exponents)) {
    if (!context_)
        throw validation_error("monomial requires a variable context");
    if (exponents_.size() != context_->size())
        throw validation_error("exponent vector length does not match context size");
    for (Exponent e : exponents_)
        if (e < 0)
            throw validation_error("exponents must be nonnegative");
}

Monomial Monomial::one(ContextPtr context) {
    std::size_t n = context->size();
    return Monomial(std::move(context), std::vector<Exponent>(n, 0));
}

Monomial Monomial::variable(ContextPtr context, std::size_t index, Exponent e) {
    if (index >= context->size())
        throw validation_error("variable index out of range");
    if (e < 0)
        throw validation_error("exponents must be nonnegative");
    std::vector<Exponent> exps(context->size(), 0);
    exps[index] = e;
    return Monomial(std::move(context), std::move(exps));
}

long long Monomial::degree() const {
    long long d = 0;
    for (Exponent e : exponents_)
        d += e;
    return d;
}

long long Monomial::degree_on(const std::vector<std::size_t>& vars) const {
    long long d = 0;
    for (std::size_t i : vars)
        d += exponents_.at(i);
    return d;
}

bool Monomial::is_one() const {
    for (Exponent e : exponents_)
        if (e != 0)
            return false;
    return true;
}

bool Monomial::is_squarefree() const {
    for (Exponent e : exponents_)
        if (e > 1)
            return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_context(context_, other.context_);
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_context(context_, other.context_);
    std::vector<Exponent> exps(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        exps[i] = checked_add(exponents_[i], other.exponents_[i]);
    return Monomial(context_, std::move(exps));
}

Monomial Monomial::operator/(const Monomial& other) const {
    require_same_context(context_, other.context_);
    std::vector<Exponent> exps(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] < other.exponents_[i])
            throw validation_error("monomial division is not exact");
        exps[i] = exponents_[i] - other.exponents_[i];
    }
    return Monomial(context_, std::move(exps));
}

Monomial Monomial::pow(Exponent k) const {
    if (k < 0)
        throw validation_error("monomial power requires a nonnegative exponent");
    std::vector<Exponent> exps(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        exps[i] = checked_mul(exponents_[i], k);
    return Monomial(context_, std::move(exps));
}

Monomial Monomial::colon_by(const Monomial& u) const {
    return *this / gcd(*this, u);
}

int Monomial::lex_compare(const Monomial& other) const {
    require_same_context(context_, other.context_);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] != other.exponents_[i])
            return exponents_[i] < other.exponents_[i] ? -1 : 1;
    }
    return 0;
}

bool Monomial::operator==(const Monomial& other) const {
    return same_context(context_, other.context_) && exponents_ == other.exponents_;
}

std::string Monomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0)
            continue;
        if (!first)
            out << '*';
        out << context_->name(i);
        if (exponents_[i] != 1)
            out << '^' << exponents_[i];
        first = false;
    }
    if (first)
        return "1";
    return out.str();
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_context(a.context(), b.context());
    std::vector<Exponent> exps(a.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(a.context(), std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_context(a.context(), b.context());
    std::vector<Exponent> exps(a.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(a.context(), std::move(exps));
}

} // namespace regjump
