#include "regjump/field.hpp"

#include <charconv>

namespace regjump {

bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint32_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
        throw validation_error("prime field characteristic must be below 2^31");
    if (!is_prime(p))
        throw validation_error("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q")
        return rationals();
    constexpr std::string_view prefix = "fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view num = text.substr(prefix.size());
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw validation_error("cannot parse field characteristic: " + std::string(text));
        return prime_field(p);
    }
    throw validation_error("field must be 'q' or 'fp:<prime>', got: " + std::string(text));
}

std::string FieldSpec::str() const {
    if (is_rationals())
        return "q";
    return "fp:" + std::to_string(characteristic_);
}

} // namespace regjump
