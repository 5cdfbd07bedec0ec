#pragma once

#include <cstdint>
#include <vector>

#include "rotor/dyadic.hpp"

namespace rotor {

// Passage counts of the two-direction model. Row n holds the reachable
// columns -n, -n+2, ..., +n only (parity packed: slot p maps to column
// -n + 2p). The symmetry axis is column 0.
struct CountField {
    std::vector<std::vector<std::int64_t>> rows;
    std::int64_t ants = 0;

    std::int64_t value(std::int64_t row, std::int64_t col) const;
    std::int64_t occupied_count() const;  // sites with value >= 1
};

// Same shape with real-valued (or exact dyadic) passage counts.
template <typename T>
struct BasicRealField {
    std::vector<std::vector<T>> rows;
    std::int64_t ants = 0;

    T value(std::int64_t row, std::int64_t col) const {
        if (row < 0 || row >= static_cast<std::int64_t>(rows.size())) return T{};
        if (col < -row || col > row || (col + row) % 2 != 0) return T{};
        return rows[static_cast<std::size_t>(row)][static_cast<std::size_t>((col + row) / 2)];
    }
};

using RealField = BasicRealField<double>;
using DyadicField = BasicRealField<Dyadic>;

RealField to_real(const DyadicField& field);

// Integer explicit scheme: row 0 holds all t ants at the origin; each site
// of the next row takes the rounded-up half of (west parent - 1) and the
// rounded-toward-zero half of (east parent - 1), so the odd surplus ant
// goes east and an absent parent contributes exactly 0. Stops at the first
// all-zero row.
CountField rr2_scheme(std::int64_t ants);

struct Theorem1Violation {
    std::int64_t row = 0;
    std::int64_t col = 0;  // the positive column of the pair
    std::int64_t west = 0;
    std::int64_t east = 0;
};

struct Theorem1Report {
    std::int64_t max_pair_delta = 0;  // max |east - west| over checked pairs
    std::vector<Theorem1Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Mirror-pair quasi-symmetry: for every row and every occupied pair of
// columns (-c, +c), an even ant count forces east - west == 1 exactly; an
// odd count allows east - west in {0, 1}. Violations are collected, not
// thrown.
Theorem1Report check_theorem1(const CountField& field, std::int64_t ants);

// Limit proportion of ants passing the row-n site at slot p: C(n,p) / 2^n.
// Requires 0 <= p <= n <= 60 so the count is exact in 64-bit integers.
double asymptotic_prob(int row, int slot);

// Closed-form binomial model: value = C(n,p) * t / 2^n with values below 1
// truncated to zero. Rows past `max_row` (or past the last row holding any
// value >= 1) are not materialized.
RealField binomial_field(std::int64_t ants, std::int64_t max_row);
DyadicField binomial_field_exact(std::int64_t ants, std::int64_t max_row);

// Untruncated variant, which satisfies the perpetual-motion halving
// recurrence exactly; used by the verification suites.
DyadicField binomial_untruncated_exact(std::int64_t ants, std::int64_t max_row);

// Symmetric fractional RR2: a parent with at least one ant keeps one and
// sends (value - 1)/2 both ways; a parent below 1 keeps its fraction and
// sends nothing. Stops at the first row with no site >= 1 (that row keeps
// its residue, so total mass stays t).
RealField symmetric_rr2(std::int64_t ants);
DyadicField symmetric_rr2_exact(std::int64_t ants);

struct Rr2Diff {
    RealField diff;  // pointwise |integer - real| over the union of supports
    double sup = 0.0;
};

Rr2Diff rr2_diff(const CountField& a, const RealField& b);

}  // namespace rotor
