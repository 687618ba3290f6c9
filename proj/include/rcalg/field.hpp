#pragma once

#include <cstdint>

namespace rcalg {

bool is_prime(uint64_t n);

/// Arithmetic in GF(p), p < 2^31.
struct PrimeField
{
    uint32_t p = 32003;

    PrimeField() = default;
    explicit PrimeField(uint32_t prime);

    uint32_t add(uint32_t a, uint32_t b) const
    {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const
    {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p);
        return static_cast<uint32_t>(r < 0 ? r + p : r);
    }
    /// Symmetric representative in (-p/2, p/2], used for printing.
    long long to_signed(uint32_t a) const { return a > p / 2 ? static_cast<long long>(a) - p : a; }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

} // namespace rcalg
