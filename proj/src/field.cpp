#include "rcalg/field.hpp"
#include "rcalg/errors.hpp"

#include <string>

namespace rcalg {

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

PrimeField::PrimeField(uint32_t prime) : p(prime)
{
    if (!is_prime(prime) || prime >= (1u << 31))
        throw ParamError("modulus " + std::to_string(prime) + " is not a prime below 2^31");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const
{
    uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t PrimeField::inv(uint32_t a) const
{
    if (a % p == 0)
        throw ParamError("inverse of zero");
    // extended Euclid on signed 64-bit values
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0)
        t += p;
    return static_cast<uint32_t>(t);
}

} // namespace rcalg
