#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace rotor {

// Lattice coordinate. Rows grow southward, columns grow eastward; the
// origin is (0,0) in every model.
struct Coord {
    std::int64_t row = 0;
    std::int64_t col = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

struct CoordHash {
    std::size_t operator()(const Coord& c) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(c.row) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(c.col) + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

enum class Direction : std::uint8_t { N, S, E, W, NE, NW, SE, SW };

inline constexpr std::size_t kDirectionCount = 8;

// Fixed offset table: N=(-1,0), S=(+1,0), E=(0,+1), W=(0,-1), diagonals
// composed from the cardinals.
Coord offset(Direction d);

std::string_view direction_name(Direction d);

struct RotorProgram {
    std::vector<Direction> steps;
    std::string name;

    std::size_t length() const { return steps.size(); }

    friend bool operator==(const RotorProgram& a, const RotorProgram& b) {
        return a.steps == b.steps;
    }
};

// Built-in programs. All start pointing North.
RotorProgram rr4();
RotorProgram rr48ew();
RotorProgram rr811nwe();

// Parses a comma-separated direction list, e.g. "N,W,S,E". Case-insensitive,
// whitespace around tokens allowed. Throws std::invalid_argument naming the
// offending token; an empty list is an error.
RotorProgram parse_program(std::string_view text);

// Canonical comma-separated form, e.g. "N,W,S,E".
std::string program_text(const RotorProgram& program);

struct RotorState {
    std::int32_t index = 0;

    friend bool operator==(const RotorState&, const RotorState&) = default;
};

struct Advance {
    RotorState state;
    Direction dir;
};

// Turn first, then move: new index = (index + 1) mod length and the ant
// departs toward steps[new index].
Advance advance_rotor(const RotorProgram& program, RotorState state);

// Dense origin-centered 2D array. Reads outside the stored bounds return a
// default-constructed value; writes outside grow the storage: the exceeded
// dimension at least doubles and is re-centered on the origin, so cell
// addresses stay origin-relative and no value is ever dropped.
template <typename V>
class Grid {
public:
    Grid() = default;

    Grid(std::int64_t row_min, std::int64_t row_max, std::int64_t col_min, std::int64_t col_max)
        : row_min_(row_min), row_max_(row_max), col_min_(col_min), col_max_(col_max) {
        assert(row_min <= 0 && row_max >= 0 && col_min <= 0 && col_max >= 0);
        cells_.assign(static_cast<std::size_t>(height() * width()), V{});
    }

    std::int64_t row_min() const { return row_min_; }
    std::int64_t row_max() const { return row_max_; }
    std::int64_t col_min() const { return col_min_; }
    std::int64_t col_max() const { return col_max_; }
    std::int64_t height() const { return row_max_ - row_min_ + 1; }
    std::int64_t width() const { return col_max_ - col_min_ + 1; }

    bool in_bounds(Coord c) const {
        return c.row >= row_min_ && c.row <= row_max_ && c.col >= col_min_ && c.col <= col_max_;
    }

    V get(Coord c) const { return in_bounds(c) ? cells_[index_of(c)] : V{}; }

    void set(Coord c, V v) { cell(c) = std::move(v); }

    // Mutable cell access; grows the grid if c is out of bounds.
    V& cell(Coord c) {
        if (!in_bounds(c)) grow_to(c);
        return cells_[index_of(c)];
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::int64_t r = row_min_; r <= row_max_; ++r)
            for (std::int64_t c = col_min_; c <= col_max_; ++c) fn(Coord{r, c}, cells_[index_of({r, c})]);
    }

private:
    // Column-contiguous storage: the sweep engines scan whole columns.
    std::size_t index_of(Coord c) const {
        return static_cast<std::size_t>((c.col - col_min_) * height() + (c.row - row_min_));
    }

    void grow_to(Coord c) {
        std::int64_t rh = std::max(std::llabs(row_min_), std::llabs(row_max_));
        std::int64_t ch = std::max(std::llabs(col_min_), std::llabs(col_max_));
        if (c.row < row_min_ || c.row > row_max_) rh = std::max({std::llabs(c.row), 2 * rh, std::int64_t{1}});
        if (c.col < col_min_ || c.col > col_max_) ch = std::max({std::llabs(c.col), 2 * ch, std::int64_t{1}});
        Grid grown(-rh, rh, -ch, ch);
        for (std::int64_t col = col_min_; col <= col_max_; ++col) {
            V* src = &cells_[index_of(Coord{row_min_, col})];
            V* dst = &grown.cells_[grown.index_of(Coord{row_min_, col})];
            for (std::int64_t i = 0; i < height(); ++i) dst[i] = std::move(src[i]);
        }
        *this = std::move(grown);
    }

    std::int64_t row_min_ = 0, row_max_ = 0, col_min_ = 0, col_max_ = 0;
    std::vector<V> cells_ = std::vector<V>(1);
};

}  // namespace rotor
