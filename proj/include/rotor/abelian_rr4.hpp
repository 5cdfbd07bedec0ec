#pragma once

#include <cstdint>
#include <vector>

#include "rotor/dyadic.hpp"
#include "rotor/lattice.hpp"
#include "rotor/rotor_walk.hpp"

namespace rotor {

// Batched state of the line-sweep generation: all t ants start stacked on
// the origin and every sweep pushes surpluses outward column pair by column
// pair. Passage counts accumulate arrivals, seeding included, which matches
// the sequential walker's counting at settlement.
struct SweepState {
    Grid<std::int64_t> present;
    Grid<std::int32_t> rotors;  // rotor slot index per site
    Grid<std::int64_t> passages;
    RotorProgram program;
    std::int64_t ants = 0;
    std::int64_t iteration = 0;

    // live bounding box of sites with present >= 1
    std::int64_t occ_row_min = 0, occ_row_max = 0;
    std::int64_t occ_col_min = 0, occ_col_max = 0;
    std::int64_t surplus_sites = 0;  // sites holding 2+ ants

    bool settled() const { return surplus_sites == 0; }
};

SweepState make_sweep_state(std::int64_t ants, RotorProgram program);

// One full outward pass: origin column first, then column pairs (-d, +d)
// with the west column before the east one, rows in increasing order.
// Every site holding 2+ ants at its processing moment fires exactly once
// (multi-fire on its live count); deposits made earlier in the same pass
// are seen by later sites. Increments the iteration counter.
void sweep(SweepState& state);

struct SettleResult {
    SweepState state;
    bool settled = false;
    std::int64_t sweeps_used = 0;
};

// Sweeps until every site holds at most one ant or max_sweeps is spent.
// An unconverged run is a first-class partial result, not an error. On
// settlement the occupied set equals the sequential walker's exactly.
SettleResult run_until_settled(std::int64_t ants, const RotorProgram& program,
                               std::int64_t max_sweeps);

std::int64_t max_present(const SweepState& state);
std::vector<Coord> occupied_sites(const SweepState& state);

// Fractional sibling: a site with v >= 1 keeps one ant and sends (v - 1)/4
// to each cardinal neighbor; sites below 1 are inert. No rotors.
template <typename T>
struct BasicSymmetricState {
    Grid<T> present;
    Grid<T> passages;
    std::int64_t ants = 0;
    std::int64_t iteration = 0;

    std::int64_t occ_row_min = 0, occ_row_max = 0;
    std::int64_t occ_col_min = 0, occ_col_max = 0;
};

using SymmetricState = BasicSymmetricState<double>;
using SymmetricStateExact = BasicSymmetricState<Dyadic>;

SymmetricState make_symmetric_state(std::int64_t ants);
SymmetricStateExact make_symmetric_state_exact(std::int64_t ants);

// Same pass order as sweep().
void symmetric_sweep(SymmetricState& state);
void symmetric_sweep(SymmetricStateExact& state);

double max_present(const SymmetricState& state);
Dyadic total_mass(const SymmetricStateExact& state);
double total_mass(const SymmetricState& state);

struct Rr4Diff {
    Grid<double> present_diff;
    double present_sup = 0.0;
    Grid<double> passage_diff;
    double passage_sup = 0.0;
};

// Pointwise |integer - real| for present and cumulative passage counts.
// Both states must be at the same iteration.
Rr4Diff rr4_model_diff(const SweepState& a, const SymmetricState& b);

struct SymmetryProbe {
    std::int64_t max_deviation = 0;
    Coord site;  // where the deviation is attained
};

// Compares every site's present count against its seven images under the
// symmetries of the square (axis and diagonal reflections and rotations).
SymmetryProbe quasi_symmetry_probe(const SweepState& state);

}  // namespace rotor
