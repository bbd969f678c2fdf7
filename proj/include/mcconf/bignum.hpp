#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcconf {

// Unsigned arbitrary-precision integer over little-endian 64-bit limbs.
// Just enough arithmetic for exact binomial tail sums: add, subtract,
// compare, bit shifts, multiply/divide by a machine word.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(uint64_t v);

    static BigUint power_of_two(uint32_t bits);

    bool is_zero() const { return limbs_.empty(); }
    // -1, 0, +1
    int compare(const BigUint& o) const;

    BigUint& operator+=(const BigUint& o);
    // requires *this >= o
    BigUint& operator-=(const BigUint& o);
    BigUint& mul_u64(uint64_t v);
    // in-place quotient; returns the remainder
    uint64_t divmod_u64(uint64_t v);
    BigUint& shl_bits(uint32_t bits);

    size_t bit_length() const;
    double to_double() const;
    std::string to_decimal() const;

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

private:
    void trim();
    std::vector<uint64_t> limbs_;  // no trailing zero limbs; empty == 0
};

// Row k of Pascal's triangle: C(k,0), ..., C(k,k), exact.
std::vector<BigUint> binomial_row(uint32_t k);

}  // namespace mcconf
