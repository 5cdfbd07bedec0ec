#include "rotor/dyadic.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

// Shifts limbs left by `bits` (may exceed 64).
std::vector<std::uint64_t> shift_left(const std::vector<std::uint64_t>& limbs, std::uint32_t bits) {
    if (limbs.empty() || bits == 0) return limbs;
    const std::uint32_t words = bits / 64;
    const std::uint32_t rem = bits % 64;
    std::vector<std::uint64_t> out(limbs.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        out[i + words] |= rem ? (limbs[i] << rem) : limbs[i];
        if (rem) out[i + words + 1] |= limbs[i] >> (64 - rem);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

Dyadic::Dyadic(std::uint64_t value) {
    if (value) limbs_.push_back(value);
}

Dyadic Dyadic::from_ratio(std::uint64_t numerator, std::uint32_t pow2) {
    Dyadic d(numerator);
    if (!d.is_zero()) d.exp_ = pow2;
    d.normalize();
    return d;
}

void Dyadic::normalize() {
    if (limbs_.empty()) {
        exp_ = 0;
        return;
    }
    // Strip whole zero limbs first, then bits, never past exp = 0.
    std::uint32_t tz = 0;
    for (std::size_t i = 0; i < limbs_.size() && limbs_[i] == 0; ++i) tz += 64;
    if (tz < 64 * limbs_.size())
        tz += static_cast<std::uint32_t>(std::countr_zero(limbs_[tz / 64]));
    const std::uint32_t shift = std::min(tz, exp_);
    if (shift == 0) return;
    const std::uint32_t words = shift / 64;
    const std::uint32_t rem = shift % 64;
    limbs_.erase(limbs_.begin(), limbs_.begin() + words);
    if (rem) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= rem;
            if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (64 - rem);
        }
    }
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    exp_ -= shift;
}

bool Dyadic::at_least_one() const {
    if (limbs_.empty()) return false;
    // value >= 1 iff numerator has a set bit at position >= exp
    const std::uint64_t top_bit = 64 * limbs_.size() - static_cast<std::uint64_t>(std::countl_zero(limbs_.back())) - 1;
    return top_bit >= exp_;
}

Dyadic Dyadic::half() const {
    Dyadic out = *this;
    if (!out.is_zero()) {
        ++out.exp_;
        out.normalize();
    }
    return out;
}

Dyadic Dyadic::quarter() const { return half().half(); }

Dyadic Dyadic::minus_one() const {
    assert(at_least_one());
    if (!at_least_one()) throw std::logic_error("Dyadic::minus_one on value < 1");
    Dyadic out = *this;
    // subtract 2^exp from the numerator
    std::size_t word = out.exp_ / 64;
    std::uint64_t bit = 1ull << (out.exp_ % 64);
    while (true) {
        std::uint64_t before = out.limbs_[word];
        out.limbs_[word] -= bit;
        if (before >= bit) break;  // no borrow
        bit = 1;
        ++word;
    }
    while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
    out.normalize();
    return out;
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const std::uint32_t exp = std::max(exp_, other.exp_);
    std::vector<std::uint64_t> a = shift_left(limbs_, exp - exp_);
    std::vector<std::uint64_t> b = shift_left(other.limbs_, exp - other.exp_);
    if (a.size() < b.size()) a.swap(b);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t rhs = i < b.size() ? b[i] : 0;
        if (rhs == 0 && carry == 0) continue;
        std::uint64_t sum = a[i] + rhs;
        std::uint64_t c1 = sum < rhs ? 1u : 0u;
        sum += carry;
        carry = c1 + (sum < carry ? 1u : 0u);
        a[i] = sum;
    }
    if (carry) a.push_back(carry);
    Dyadic out;
    out.limbs_ = std::move(a);
    out.exp_ = exp;
    out.normalize();
    return out;
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    double v = 0.0;
    // Top two limbs carry more than a double's mantissa.
    const std::size_t n = limbs_.size();
    const std::size_t lo = n > 2 ? n - 2 : 0;
    for (std::size_t i = n; i-- > lo;) v = v * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return std::ldexp(v, static_cast<int>(64 * lo) - static_cast<int>(exp_));
}

}  // namespace rotor
