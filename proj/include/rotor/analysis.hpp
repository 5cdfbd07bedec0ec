#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rotor/lattice.hpp"

namespace rotor {

struct ShapeMetrics {
    double inradius = 0.0;   // largest attained site norm r with the full disk of radius r occupied
    double outradius = 0.0;  // max Euclidean norm over occupied sites
    double ratio = 0.0;      // inradius / outradius (1.0 when outradius is 0)
    std::int64_t site_count = 0;
};

// Exact in integer arithmetic: all norm comparisons are on squared norms.
// Throws std::invalid_argument on an empty set; the set must contain the
// origin.
ShapeMetrics shape_metrics(std::span<const Coord> occupied);

struct ScalingRow {
    std::int64_t ants = 0;
    double sup = 0.0;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    std::vector<double> envelope;  // running max of sup
    // true when no doubling step grows the sup faster than a log2 curve
    // would (at most +1 per doubling); descriptive, not a proof
    bool slower_than_log2 = true;
};

// Integer scheme vs. symmetric fractional RR2: sup of the pointwise
// difference for each ant count.
ScalingReport conjecture1_scaling(std::span<const std::int64_t> ant_counts);

// Max present-count deviation over square-symmetry orbits, sampled after
// every sweep of the batched RR4 run.
std::vector<std::int64_t> conjecture2_trace(std::int64_t ants, std::int64_t sweeps);

// |Nbf(n,c,t)/t - C(n,p)/2^n| for each ant count, with c = -n + 2p.
std::vector<double> theorem2_convergence(int row, int slot, std::span<const std::int64_t> ant_counts);

}  // namespace rotor
