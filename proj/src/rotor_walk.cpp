#include "rotor/rotor_walk.hpp"

#include <stdexcept>

namespace rotor {

Coord settle_one_ant(WalkField& field, const RotorProgram& program) {
    Coord pos{0, 0};
    for (std::int64_t step = 0; step < kWalkStepCap; ++step) {
        WalkCell& cell = field.cells.cell(pos);
        ++cell.passages;
        if (!cell.occupied) {
            cell.occupied = true;
            cell.first_visit = ++field.settled;
            return pos;
        }
        Advance adv = advance_rotor(program, cell.rotor);
        cell.rotor = adv.state;
        Coord d = offset(adv.dir);
        pos.row += d.row;
        pos.col += d.col;
        ++field.total_steps;
    }
    throw std::runtime_error("rotor walk exceeded step cap");
}

WalkField run_walk(std::int64_t ants, const RotorProgram& program) {
    if (ants < 1) throw std::invalid_argument("run_walk requires at least one ant");
    WalkField field;
    for (std::int64_t i = 0; i < ants; ++i) settle_one_ant(field, program);
    return field;
}

FireResult fire_site(std::int64_t present, RotorState rotor, const RotorProgram& program) {
    assert(present >= 2);
    FireResult result;
    result.rotor = rotor;
    if (present < 2) return result;

    const std::int64_t len = static_cast<std::int64_t>(program.length());
    const std::int64_t departing = present - 1;
    const std::int64_t cycles = departing / len;
    const std::int64_t rem = departing % len;

    // Every slot fires `cycles` times; the `rem` slots after the current
    // index fire once more. Slot counts then collapse onto directions.
    for (std::int64_t s = 0; s < len; ++s) {
        std::int64_t shots = cycles;
        std::int64_t ahead = (s - rotor.index + len) % len;  // advances needed to reach slot s
        if (ahead >= 1 && ahead <= rem) ++shots;
        if (shots > 0) result.departures[static_cast<std::size_t>(program.steps[static_cast<std::size_t>(s)])] += shots;
    }
    result.rotor.index = static_cast<std::int32_t>((rotor.index + departing) % len);
    return result;
}

std::vector<Coord> occupied_sites(const WalkField& field) {
    std::vector<Coord> sites;
    sites.reserve(static_cast<std::size_t>(field.settled));
    field.cells.for_each([&](Coord c, const WalkCell& cell) {
        if (cell.occupied) sites.push_back(c);
    });
    return sites;
}

}  // namespace rotor
