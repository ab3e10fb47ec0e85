#ifndef REGJUMP_FIELD_HPP
#define REGJUMP_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "regjump/errors.hpp"

namespace regjump {

/// Coefficient field: the rationals (characteristic 0) or a prime field
/// F_p with p < 2^31. Primality is checked at construction.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint32_t p);

    /// Accepts "q" or "fp:<prime>".
    static FieldSpec parse(std::string_view text);

    std::uint32_t characteristic() const { return characteristic_; }
    bool is_rationals() const { return characteristic_ == 0; }

    std::string str() const;

    bool operator==(const FieldSpec& other) const {
        return characteristic_ == other.characteristic_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

private:
    explicit FieldSpec(std::uint32_t c) : characteristic_(c) {}
    std::uint32_t characteristic_;
};

bool is_prime(std::uint32_t n);

} // namespace regjump

#endif
