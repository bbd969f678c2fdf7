#include "mcconf/bignum.hpp"

#include <algorithm>
#include <cstdio>

namespace mcconf {

using u128 = unsigned __int128;

BigUint::BigUint(uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::power_of_two(uint32_t bits) {
    BigUint r(1);
    r.shl_bits(bits);
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    u128 carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    // caller guarantees *this >= o
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = borrow;
        if (i < o.limbs_.size()) sub += o.limbs_[i];
        if (static_cast<u128>(limbs_[i]) >= sub) {
            limbs_[i] -= static_cast<uint64_t>(sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<uint64_t>((static_cast<u128>(1) << 64) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint& BigUint::mul_u64(uint64_t v) {
    if (v == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    u128 carry = 0;
    for (auto& limb : limbs_) {
        u128 p = static_cast<u128>(limb) * v + carry;
        limb = static_cast<uint64_t>(p);
        carry = p >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

uint64_t BigUint::divmod_u64(uint64_t v) {
    u128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<uint64_t>(cur / v);
        rem = cur % v;
    }
    trim();
    return static_cast<uint64_t>(rem);
}

BigUint& BigUint::shl_bits(uint32_t bits) {
    if (is_zero() || bits == 0) return *this;
    const uint32_t limb_shift = bits / 64;
    const uint32_t bit_shift = bits % 64;
    if (bit_shift != 0) {
        uint64_t carry = 0;
        for (auto& limb : limbs_) {
            uint64_t next_carry = limb >> (64 - bit_shift);
            limb = (limb << bit_shift) | carry;
            carry = next_carry;
        }
        if (carry) limbs_.push_back(carry);
    }
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    return *this;
}

size_t BigUint::bit_length() const {
    if (is_zero()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - static_cast<size_t>(__builtin_clzll(limbs_.back())));
}

double BigUint::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 0x1.0p64 + static_cast<double>(limbs_[i]);
    return r;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint work = *this;
    std::string out;
    while (!work.is_zero()) {
        uint64_t chunk = work.divmod_u64(10'000'000'000'000'000'000ull);  // 10^19
        char buf[24];
        if (work.is_zero()) {
            std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(chunk));
        } else {
            std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(chunk));
        }
        out.insert(0, buf);
    }
    return out;
}

std::vector<BigUint> binomial_row(uint32_t k) {
    std::vector<BigUint> row;
    row.reserve(k + 1);
    row.emplace_back(1);
    for (uint32_t j = 0; j < k; ++j) {
        BigUint next = row.back();
        next.mul_u64(k - j);
        next.divmod_u64(j + 1);  // divides exactly
        row.push_back(std::move(next));
    }
    return row;
}

}  // namespace mcconf
