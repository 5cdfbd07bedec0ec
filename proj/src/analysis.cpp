#include "rotor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "rotor/abelian_rr2.hpp"
#include "rotor/abelian_rr4.hpp"

namespace rotor {

namespace {

bool is_sum_of_two_squares(std::int64_t n) {
    for (std::int64_t a = 0; a * a * 2 <= n; ++a) {
        const std::int64_t rest = n - a * a;
        const std::int64_t b = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        for (std::int64_t bb = std::max<std::int64_t>(0, b - 1); bb <= b + 1; ++bb)
            if (bb * bb == rest) return true;
    }
    return false;
}

}  // namespace

ShapeMetrics shape_metrics(std::span<const Coord> occupied) {
    if (occupied.empty()) throw std::invalid_argument("shape_metrics requires a non-empty site set");
    std::unordered_set<Coord, CoordHash> sites(occupied.begin(), occupied.end());
    if (!sites.contains({0, 0}))
        throw std::invalid_argument("shape_metrics requires the origin to be occupied");

    ShapeMetrics metrics;
    metrics.site_count = static_cast<std::int64_t>(sites.size());
    std::int64_t out2 = 0;
    for (const Coord& c : sites) out2 = std::max(out2, c.row * c.row + c.col * c.col);
    metrics.outradius = std::sqrt(static_cast<double>(out2));

    // Nearest unoccupied site; scanning one ring beyond the outradius is
    // always enough to find one.
    const std::int64_t reach = static_cast<std::int64_t>(std::ceil(metrics.outradius)) + 1;
    std::int64_t nearest_missing2 = reach * reach * 4;
    for (std::int64_t r = -reach; r <= reach; ++r) {
        for (std::int64_t c = -reach; c <= reach; ++c) {
            const std::int64_t n2 = r * r + c * c;
            if (n2 >= nearest_missing2) continue;
            if (!sites.contains({r, c})) nearest_missing2 = n2;
        }
    }
    // Largest norm any lattice site can attain strictly inside the missing
    // site's circle; every site there is occupied.
    std::int64_t in2 = 0;
    for (std::int64_t n2 = nearest_missing2 - 1; n2 > 0; --n2) {
        if (is_sum_of_two_squares(n2)) {
            in2 = n2;
            break;
        }
    }
    metrics.inradius = std::sqrt(static_cast<double>(in2));
    metrics.ratio = out2 == 0 ? 1.0 : metrics.inradius / metrics.outradius;
    return metrics;
}

ScalingReport conjecture1_scaling(std::span<const std::int64_t> ant_counts) {
    ScalingReport report;
    for (std::size_t i = 1; i < ant_counts.size(); ++i)
        if (ant_counts[i] <= ant_counts[i - 1])
            throw std::invalid_argument("conjecture1_scaling requires strictly increasing ant counts");
    double envelope = 0.0;
    for (std::int64_t t : ant_counts) {
        const CountField scheme = rr2_scheme(t);
        const RealField sym = symmetric_rr2(t);
        const Rr2Diff diff = rr2_diff(scheme, sym);
        envelope = std::max(envelope, diff.sup);
        report.rows.push_back({t, diff.sup});
        report.envelope.push_back(envelope);
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const double dlog = std::log2(static_cast<double>(report.rows[i].ants)) -
                            std::log2(static_cast<double>(report.rows[i - 1].ants));
        if (report.rows[i].sup - report.rows[i - 1].sup > dlog + 1e-9) report.slower_than_log2 = false;
    }
    return report;
}

std::vector<std::int64_t> conjecture2_trace(std::int64_t ants, std::int64_t sweeps) {
    SweepState state = make_sweep_state(ants, rr4());
    std::vector<std::int64_t> series;
    series.reserve(static_cast<std::size_t>(sweeps));
    for (std::int64_t i = 0; i < sweeps; ++i) {
        sweep(state);
        series.push_back(quasi_symmetry_probe(state).max_deviation);
        if (state.settled()) break;
    }
    return series;
}

std::vector<double> theorem2_convergence(int row, int slot,
                                         std::span<const std::int64_t> ant_counts) {
    if (row < 0 || row > 16 || slot < 0 || slot > row)
        throw std::invalid_argument("theorem2_convergence requires 0 <= slot <= row <= 16");
    const double limit = asymptotic_prob(row, slot);
    const std::int64_t col = -row + 2 * slot;
    std::vector<double> errors;
    errors.reserve(ant_counts.size());
    for (std::int64_t t : ant_counts) {
        const CountField field = rr2_scheme(t);
        const double proportion = static_cast<double>(field.value(row, col)) / static_cast<double>(t);
        errors.push_back(std::abs(proportion - limit));
    }
    return errors;
}

}  // namespace rotor
