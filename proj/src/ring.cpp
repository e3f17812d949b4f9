#include "qh/ring.hpp"

namespace qh {

Ring Ring::prime_field(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
}

std::string Ring::name() const
{
    return kind == Kind::Integers ? std::string("Z") : "F" + std::to_string(p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace mod {

std::uint32_t inv(std::uint32_t a, std::uint32_t p)
{
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1)
        throw std::domain_error("element not invertible");
    return reduce(t, p);
}

} // namespace mod
} // namespace qh
