#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rotor/lattice.hpp"

namespace rotor {

struct WalkCell {
    std::int64_t passages = 0;     // ants that ever visited, resident included
    std::int64_t first_visit = 0;  // 1-based settlement number, 0 = never occupied
    RotorState rotor;
    bool occupied = false;
};

struct WalkField {
    Grid<WalkCell> cells;
    std::int64_t settled = 0;      // ants settled so far
    std::int64_t total_steps = 0;  // non-settling moves, for passage accounting
};

// Ceiling for a single ant's walk; a rotor walk over a finite occupied set
// always terminates, so hitting this means a bug.
inline constexpr std::int64_t kWalkStepCap = 10'000'000'000;

// Walks one ant from the origin: every occupied site counts the passage,
// turns its rotor and forwards the ant; the first unoccupied site keeps it.
// Returns the settlement coordinate.
Coord settle_one_ant(WalkField& field, const RotorProgram& program);

// Settles `ants` ants one after the other.
WalkField run_walk(std::int64_t ants, const RotorProgram& program);

struct FireResult {
    std::array<std::int64_t, kDirectionCount> departures{};  // indexed by Direction
    RotorState rotor;
};

// Multi-fire: with m ants present, m-1 depart in one batch, departure k
// taking steps[(index + k) mod length]; equivalent to m-1 sequential rotor
// advances. Precondition m >= 2 (m < 2 is a caller bug and a no-op).
FireResult fire_site(std::int64_t present, RotorState rotor, const RotorProgram& program);

std::vector<Coord> occupied_sites(const WalkField& field);

}  // namespace rotor
