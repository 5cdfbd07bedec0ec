#pragma once

#include <cstdint>
#include <vector>

namespace rotor {

// Nonnegative dyadic rational numerator / 2^exp with an arbitrary-precision
// numerator. Closed under the halving and subtract-one steps of the
// fractional models, so verification arithmetic never rounds.
class Dyadic {
public:
    Dyadic() = default;
    explicit Dyadic(std::uint64_t value);

    // numerator / 2^pow2
    static Dyadic from_ratio(std::uint64_t numerator, std::uint32_t pow2);

    bool is_zero() const { return limbs_.empty(); }
    bool at_least_one() const;  // value >= 1

    Dyadic half() const;
    Dyadic quarter() const;
    Dyadic minus_one() const;  // precondition: value >= 1

    Dyadic operator+(const Dyadic& other) const;
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.limbs_ == b.limbs_;
    }

    double to_double() const;

private:
    // Little-endian numerator limbs, no trailing zero limbs; kept in lowest
    // terms (numerator odd or exp == 0), so equality is representational.
    std::vector<std::uint64_t> limbs_;
    std::uint32_t exp_ = 0;

    void normalize();
};

}  // namespace rotor
