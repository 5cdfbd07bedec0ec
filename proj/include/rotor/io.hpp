#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rotor/abelian_rr2.hpp"
#include "rotor/abelian_rr4.hpp"
#include "rotor/lattice.hpp"
#include "rotor/rotor_walk.hpp"

namespace rotor {

enum class PgmMode { linear, log };

// Binary PGM (P5, maxval 255) over the grid's stored bounds, rows
// north-to-south, columns west-to-east. Linear scales [0, max] onto
// [0, 255]; log maps v to round(255 * ln(1+v)/ln(1+max)).
void write_pgm(const Grid<std::int64_t>& grid, PgmMode mode, const std::string& path);
void write_pgm(const Grid<double>& grid, PgmMode mode, const std::string& path);

// Binary PPM (P6, maxval 255). Negative cells are background black; other
// cells are colored by index mod 4: blue, green, red, yellow.
void write_ppm_rotors(const Grid<std::int32_t>& color_indices, const std::string& path);

// "row,col,value" per nonzero site, sorted by (row, col), with a header
// line. Doubles are printed with 17 significant digits so a parse
// round-trips exactly.
void write_csv(const Grid<std::int64_t>& grid, const std::string& path);
void write_csv(const Grid<double>& grid, const std::string& path);

struct CsvCell {
    Coord site;
    double value = 0.0;
};

std::vector<CsvCell> read_csv(const std::string& path);

// FNV-1a 64-bit over the file bytes, as "fnv1a64:<hex>".
std::string hash_file(const std::string& path);

// Manifest writing works on a ready JSON document so callers control the
// metric set; keys are emitted sorted and the file ends with a newline.
void write_manifest(const nlohmann::json& doc, const std::string& path);

// Composes the standard manifest document: model, ants, program, sweeps
// (null when absent), numeric_mode, metrics, and a files map of
// name -> content hash.
nlohmann::json make_manifest(const std::string& model, std::int64_t ants,
                             const std::string& program, std::optional<std::int64_t> sweeps,
                             const std::string& numeric_mode, const nlohmann::json& metrics,
                             const std::map<std::string, std::string>& file_hashes);

// Tight content-cropped rasters for the writers; every adapter derives its
// bounds from the values alone, never from internal storage growth.
Grid<std::int64_t> passage_grid(const WalkField& field);
Grid<std::int64_t> first_visit_grid(const WalkField& field);
Grid<std::int32_t> rotor_color_grid(const WalkField& field);

Grid<std::int64_t> to_grid(const CountField& field);
Grid<double> to_grid(const RealField& field);

Grid<std::int64_t> present_grid(const SweepState& state);
Grid<std::int64_t> passage_grid(const SweepState& state);
Grid<std::int32_t> rotor_color_grid(const SweepState& state);

Grid<double> present_grid(const SymmetricState& state);
Grid<double> passage_grid(const SymmetricState& state);
// floor(cumulative passage) mod 4 where any mass ever arrived
Grid<std::int32_t> rotor_color_grid(const SymmetricState& state);

}  // namespace rotor
