#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srx {

/// Coefficient field for homology: characteristic 0 means ℚ, otherwise GF(p).
struct FieldSpec {
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::uint32_t p);

    bool is_rational() const { return characteristic == 0; }
    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint32_t p);

}  // namespace srx
