#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qh {

/// Coefficient ring of a chain complex: the integers or a prime field F_p.
struct Ring {
    enum class Kind { Integers, PrimeField };
    Kind kind = Kind::Integers;
    std::uint32_t p = 0;

    static Ring integers() { return {}; }
    static Ring prime_field(std::uint32_t p);

    bool is_field() const { return kind == Kind::PrimeField; }
    std::string name() const;
    bool operator==(const Ring&) const = default;
};

bool is_prime(std::uint64_t n);

namespace mod {

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

} // namespace mod

} // namespace qh
