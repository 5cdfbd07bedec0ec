#include "rotor/lattice.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace rotor {

namespace {

constexpr std::array<Coord, kDirectionCount> kOffsets = {{
    {-1, 0},   // N
    {+1, 0},   // S
    {0, +1},   // E
    {0, -1},   // W
    {-1, +1},  // NE
    {-1, -1},  // NW
    {+1, +1},  // SE
    {+1, -1},  // SW
}};

constexpr std::array<std::string_view, kDirectionCount> kNames = {
    "N", "S", "E", "W", "NE", "NW", "SE", "SW",
};

}  // namespace

Coord offset(Direction d) { return kOffsets[static_cast<std::size_t>(d)]; }

std::string_view direction_name(Direction d) { return kNames[static_cast<std::size_t>(d)]; }

RotorProgram rr4() {
    return {{Direction::N, Direction::W, Direction::S, Direction::E}, "RR4"};
}

RotorProgram rr48ew() {
    return {{Direction::N, Direction::W, Direction::W, Direction::W, Direction::S, Direction::E,
             Direction::E, Direction::E},
            "RR48EW"};
}

RotorProgram rr811nwe() {
    return {{Direction::N, Direction::N, Direction::NW, Direction::W, Direction::W, Direction::SW,
             Direction::S, Direction::SE, Direction::E, Direction::E, Direction::NE},
            "RR811NWE"};
}

RotorProgram parse_program(std::string_view text) {
    RotorProgram program;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string token;
        for (char ch : text.substr(pos, comma - pos))
            if (!std::isspace(static_cast<unsigned char>(ch)))
                token += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (token.empty()) {
            if (pos == 0 && comma == text.size()) break;  // wholly empty list
            throw std::invalid_argument("empty direction token in rotor program");
        }
        bool found = false;
        for (std::size_t d = 0; d < kDirectionCount; ++d) {
            if (token == kNames[d]) {
                program.steps.push_back(static_cast<Direction>(d));
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown direction \"" + token + "\" in rotor program");
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (program.steps.empty()) throw std::invalid_argument("empty rotor program");
    for (const RotorProgram& builtin : {rr4(), rr48ew(), rr811nwe()}) {
        if (program.steps == builtin.steps) {
            program.name = builtin.name;
            return program;
        }
    }
    program.name = program_text(program);
    return program;
}

std::string program_text(const RotorProgram& program) {
    std::string out;
    for (std::size_t i = 0; i < program.steps.size(); ++i) {
        if (i) out += ',';
        out += direction_name(program.steps[i]);
    }
    return out;
}

Advance advance_rotor(const RotorProgram& program, RotorState state) {
    assert(!program.steps.empty());
    assert(state.index >= 0 && static_cast<std::size_t>(state.index) < program.steps.size());
    RotorState next{static_cast<std::int32_t>((state.index + 1) % static_cast<std::int32_t>(program.length()))};
    return {next, program.steps[static_cast<std::size_t>(next.index)]};
}

}  // namespace rotor
