#include "rotor/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rotor {

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

template <typename V>
double grid_max(const Grid<V>& grid) {
    double best = 0.0;
    grid.for_each([&](Coord, V v) { best = std::max(best, static_cast<double>(v)); });
    return best;
}

template <typename V>
void write_pgm_impl(const Grid<V>& grid, PgmMode mode, const std::string& path) {
    const double max = grid_max(grid);
    const double log_den = std::log1p(max);
    std::ofstream out = open_out(path, std::ios::binary);
    out << "P5\n" << grid.width() << ' ' << grid.height() << "\n255\n";
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(grid.width() * grid.height()));
    for (std::int64_t r = grid.row_min(); r <= grid.row_max(); ++r) {
        for (std::int64_t c = grid.col_min(); c <= grid.col_max(); ++c) {
            const double v = static_cast<double>(grid.get({r, c}));
            double px = 0.0;
            if (max > 0.0 && v > 0.0)
                px = mode == PgmMode::linear ? 255.0 * v / max : 255.0 * std::log1p(v) / log_den;
            bytes.push_back(static_cast<char>(static_cast<unsigned char>(std::llround(px))));
        }
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    finish(out, path);
}

constexpr unsigned char kRotorPalette[4][3] = {
    {0, 0, 255},    // 0: blue
    {0, 255, 0},    // 1: green
    {255, 0, 0},    // 2: red
    {255, 255, 0},  // 3: yellow
};

template <typename V, typename Keep>
void write_csv_impl(const Grid<V>& grid, const std::string& path, Keep keep) {
    std::ofstream out = open_out(path, std::ios::binary);
    out << "row,col,value\n";
    for (std::int64_t r = grid.row_min(); r <= grid.row_max(); ++r) {
        for (std::int64_t c = grid.col_min(); c <= grid.col_max(); ++c) {
            const V v = grid.get({r, c});
            if (!keep(v)) continue;
            out << r << ',' << c << ',';
            if constexpr (std::is_same_v<V, double>) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out << buf;
            } else {
                out << v;
            }
            out << '\n';
        }
    }
    finish(out, path);
}

}  // namespace

void write_pgm(const Grid<std::int64_t>& grid, PgmMode mode, const std::string& path) {
    write_pgm_impl(grid, mode, path);
}

void write_pgm(const Grid<double>& grid, PgmMode mode, const std::string& path) {
    write_pgm_impl(grid, mode, path);
}

void write_ppm_rotors(const Grid<std::int32_t>& color_indices, const std::string& path) {
    std::ofstream out = open_out(path, std::ios::binary);
    out << "P6\n" << color_indices.width() << ' ' << color_indices.height() << "\n255\n";
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(3 * color_indices.width() * color_indices.height()));
    for (std::int64_t r = color_indices.row_min(); r <= color_indices.row_max(); ++r) {
        for (std::int64_t c = color_indices.col_min(); c <= color_indices.col_max(); ++c) {
            const std::int32_t idx = color_indices.get({r, c});
            if (idx < 0) {
                bytes.append(3, '\0');
            } else {
                const unsigned char* rgb = kRotorPalette[idx % 4];
                bytes.push_back(static_cast<char>(rgb[0]));
                bytes.push_back(static_cast<char>(rgb[1]));
                bytes.push_back(static_cast<char>(rgb[2]));
            }
        }
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    finish(out, path);
}

void write_csv(const Grid<std::int64_t>& grid, const std::string& path) {
    write_csv_impl(grid, path, [](std::int64_t v) { return v != 0; });
}

void write_csv(const Grid<double>& grid, const std::string& path) {
    write_csv_impl(grid, path, [](double v) { return v != 0.0; });
}

std::vector<CsvCell> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<CsvCell> cells;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {  // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        CsvCell cell;
        char* end = nullptr;
        cell.site.row = std::strtoll(line.c_str(), &end, 10);
        if (!end || *end != ',') throw std::runtime_error("malformed csv line: " + line);
        cell.site.col = std::strtoll(end + 1, &end, 10);
        if (!end || *end != ',') throw std::runtime_error("malformed csv line: " + line);
        cell.value = std::strtod(end + 1, &end);
        cells.push_back(cell);
    }
    return cells;
}

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for hashing: " + path);
    std::uint64_t h = 14695981039346656037ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + hex;
}

void write_manifest(const nlohmann::json& doc, const std::string& path) {
    std::ofstream out = open_out(path, std::ios::binary);
    out << doc.dump(2) << '\n';
    finish(out, path);
}

nlohmann::json make_manifest(const std::string& model, std::int64_t ants,
                             const std::string& program, std::optional<std::int64_t> sweeps,
                             const std::string& numeric_mode, const nlohmann::json& metrics,
                             const std::map<std::string, std::string>& file_hashes) {
    nlohmann::json doc;
    doc["model"] = model;
    doc["ants"] = ants;
    doc["program"] = program;
    if (sweeps)
        doc["sweeps"] = *sweeps;
    else
        doc["sweeps"] = nullptr;
    doc["numeric_mode"] = numeric_mode;
    doc["metrics"] = metrics;
    doc["files"] = file_hashes;
    return doc;
}

namespace {

// Crops to the tight bounding box of cells selected by `keep`; the origin is
// always included so an almost-empty field still rasterizes.
template <typename Src, typename V, typename Get, typename Keep>
Grid<V> crop_from(const Src& src, std::int64_t rmin, std::int64_t rmax, std::int64_t cmin,
                  std::int64_t cmax, Get get, Keep keep) {
    std::int64_t brmin = 0, brmax = 0, bcmin = 0, bcmax = 0;
    for (std::int64_t r = rmin; r <= rmax; ++r)
        for (std::int64_t c = cmin; c <= cmax; ++c)
            if (keep(get(Coord{r, c}))) {
                brmin = std::min(brmin, r);
                brmax = std::max(brmax, r);
                bcmin = std::min(bcmin, c);
                bcmax = std::max(bcmax, c);
            }
    Grid<V> out(brmin, brmax, bcmin, bcmax);
    for (std::int64_t r = brmin; r <= brmax; ++r)
        for (std::int64_t c = bcmin; c <= bcmax; ++c) out.set({r, c}, get(Coord{r, c}));
    return out;
}

}  // namespace

Grid<std::int64_t> passage_grid(const WalkField& field) {
    const auto& cells = field.cells;
    return crop_from<Grid<WalkCell>, std::int64_t>(
        cells, cells.row_min(), cells.row_max(), cells.col_min(), cells.col_max(),
        [&](Coord c) { return cells.get(c).passages; }, [](std::int64_t v) { return v != 0; });
}

Grid<std::int64_t> first_visit_grid(const WalkField& field) {
    const auto& cells = field.cells;
    return crop_from<Grid<WalkCell>, std::int64_t>(
        cells, cells.row_min(), cells.row_max(), cells.col_min(), cells.col_max(),
        [&](Coord c) { return cells.get(c).first_visit; }, [](std::int64_t v) { return v != 0; });
}

Grid<std::int32_t> rotor_color_grid(const WalkField& field) {
    const auto& cells = field.cells;
    return crop_from<Grid<WalkCell>, std::int32_t>(
        cells, cells.row_min(), cells.row_max(), cells.col_min(), cells.col_max(),
        [&](Coord c) {
            const WalkCell cell = cells.get(c);
            return cell.occupied ? cell.rotor.index % 4 : -1;
        },
        [](std::int32_t v) { return v >= 0; });
}

Grid<std::int64_t> to_grid(const CountField& field) {
    const std::int64_t rows = static_cast<std::int64_t>(field.rows.size());
    return crop_from<CountField, std::int64_t>(
        field, 0, rows - 1, -(rows - 1), rows - 1,
        [&](Coord c) { return field.value(c.row, c.col); }, [](std::int64_t v) { return v != 0; });
}

Grid<double> to_grid(const RealField& field) {
    const std::int64_t rows = static_cast<std::int64_t>(field.rows.size());
    return crop_from<RealField, double>(
        field, 0, rows - 1, -(rows - 1), rows - 1,
        [&](Coord c) { return field.value(c.row, c.col); }, [](double v) { return v != 0.0; });
}

Grid<std::int64_t> present_grid(const SweepState& state) {
    return crop_from<Grid<std::int64_t>, std::int64_t>(
        state.present, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) { return state.present.get(c); }, [](std::int64_t v) { return v != 0; });
}

Grid<std::int64_t> passage_grid(const SweepState& state) {
    return crop_from<Grid<std::int64_t>, std::int64_t>(
        state.passages, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) { return state.passages.get(c); }, [](std::int64_t v) { return v != 0; });
}

Grid<std::int32_t> rotor_color_grid(const SweepState& state) {
    return crop_from<Grid<std::int64_t>, std::int32_t>(
        state.present, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) {
            return state.present.get(c) >= 1 ? state.rotors.get(c) % 4 : -1;
        },
        [](std::int32_t v) { return v >= 0; });
}

Grid<double> present_grid(const SymmetricState& state) {
    return crop_from<Grid<double>, double>(
        state.present, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) { return state.present.get(c); }, [](double v) { return v != 0.0; });
}

Grid<double> passage_grid(const SymmetricState& state) {
    return crop_from<Grid<double>, double>(
        state.passages, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) { return state.passages.get(c); }, [](double v) { return v != 0.0; });
}

Grid<std::int32_t> rotor_color_grid(const SymmetricState& state) {
    return crop_from<Grid<double>, std::int32_t>(
        state.passages, state.occ_row_min, state.occ_row_max, state.occ_col_min, state.occ_col_max,
        [&](Coord c) {
            const double passage = state.passages.get(c);
            if (passage <= 0.0) return -1;
            return static_cast<std::int32_t>(static_cast<std::int64_t>(std::floor(passage)) % 4);
        },
        [](std::int32_t v) { return v >= 0; });
}

}  // namespace rotor
