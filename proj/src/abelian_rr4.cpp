#include "rotor/abelian_rr4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

void absorb_into_box(std::int64_t& rmin, std::int64_t& rmax, std::int64_t& cmin,
                     std::int64_t& cmax, Coord c) {
    rmin = std::min(rmin, c.row);
    rmax = std::max(rmax, c.row);
    cmin = std::min(cmin, c.col);
    cmax = std::max(cmax, c.col);
}

void fire_at(SweepState& st, Coord site, std::int64_t m) {
    FireResult fr = fire_site(m, RotorState{st.rotors.get(site)}, st.program);
    st.present.cell(site) = 1;
    --st.surplus_sites;
    st.rotors.cell(site) = fr.rotor.index;
    for (std::size_t d = 0; d < kDirectionCount; ++d) {
        const std::int64_t count = fr.departures[d];
        if (count == 0) continue;
        const Coord off = offset(static_cast<Direction>(d));
        const Coord nb{site.row + off.row, site.col + off.col};
        std::int64_t& np = st.present.cell(nb);
        if (np == 0) absorb_into_box(st.occ_row_min, st.occ_row_max, st.occ_col_min, st.occ_col_max, nb);
        if (np < 2 && np + count >= 2) ++st.surplus_sites;
        np += count;
        st.passages.cell(nb) += count;
    }
}

void process_column(SweepState& st, std::int64_t col) {
    // occ_row_max is read live: southward deposits extend this pass.
    for (std::int64_t r = st.occ_row_min; r <= st.occ_row_max; ++r) {
        const std::int64_t m = st.present.get({r, col});
        if (m >= 2) fire_at(st, {r, col}, m);
    }
}

}  // namespace

SweepState make_sweep_state(std::int64_t ants, RotorProgram program) {
    if (ants < 1) throw std::invalid_argument("sweep state requires at least one ant");
    if (program.steps.empty()) throw std::invalid_argument("sweep state requires a rotor program");
    SweepState st;
    st.program = std::move(program);
    st.ants = ants;
    st.present = Grid<std::int64_t>(-4, 4, -4, 4);
    st.rotors = Grid<std::int32_t>(-4, 4, -4, 4);
    st.passages = Grid<std::int64_t>(-4, 4, -4, 4);
    st.present.set({0, 0}, ants);
    st.passages.set({0, 0}, ants);
    st.surplus_sites = ants >= 2 ? 1 : 0;
    return st;
}

void sweep(SweepState& state) {
    process_column(state, 0);
    for (std::int64_t d = 1; d <= std::max(-state.occ_col_min, state.occ_col_max); ++d) {
        process_column(state, -d);
        process_column(state, +d);
    }
    ++state.iteration;
}

SettleResult run_until_settled(std::int64_t ants, const RotorProgram& program,
                               std::int64_t max_sweeps) {
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be at least 1");
    SettleResult result;
    result.state = make_sweep_state(ants, program);
    while (!result.state.settled() && result.sweeps_used < max_sweeps) {
        sweep(result.state);
        ++result.sweeps_used;
    }
    result.settled = result.state.settled();
    return result;
}

std::int64_t max_present(const SweepState& state) {
    std::int64_t best = 0;
    state.present.for_each([&](Coord, std::int64_t v) { best = std::max(best, v); });
    return best;
}

std::vector<Coord> occupied_sites(const SweepState& state) {
    std::vector<Coord> sites;
    state.present.for_each([&](Coord c, std::int64_t v) {
        if (v >= 1) sites.push_back(c);
    });
    return sites;
}

namespace {

struct SymDoubleOps {
    double from_int(std::int64_t v) const { return static_cast<double>(v); }
    // surplus share per neighbor; callers only ask when v >= 1
    double share(double v) const { return (v - 1.0) * 0.25; }
    bool at_least_one(double v) const { return v >= 1.0; }
    bool is_zero(double v) const { return v == 0.0; }
};

struct SymDyadicOps {
    Dyadic from_int(std::int64_t v) const { return Dyadic(static_cast<std::uint64_t>(v)); }
    Dyadic share(const Dyadic& v) const { return v.minus_one().quarter(); }
    bool at_least_one(const Dyadic& v) const { return v.at_least_one(); }
    bool is_zero(const Dyadic& v) const { return v.is_zero(); }
};

template <typename T, typename Ops>
BasicSymmetricState<T> make_symmetric(std::int64_t ants, Ops ops) {
    if (ants < 1) throw std::invalid_argument("symmetric state requires at least one ant");
    BasicSymmetricState<T> st;
    st.ants = ants;
    st.present = Grid<T>(-4, 4, -4, 4);
    st.passages = Grid<T>(-4, 4, -4, 4);
    st.present.set({0, 0}, ops.from_int(ants));
    st.passages.set({0, 0}, ops.from_int(ants));
    return st;
}

template <typename T, typename Ops>
void symmetric_process_column(BasicSymmetricState<T>& st, std::int64_t col, Ops ops) {
    for (std::int64_t r = st.occ_row_min; r <= st.occ_row_max; ++r) {
        const T v = st.present.get({r, col});
        if (!ops.at_least_one(v)) continue;
        const T share = ops.share(v);
        if (ops.is_zero(share)) continue;  // v == 1 distributes nothing
        st.present.cell({r, col}) = ops.from_int(1);
        for (Direction d : {Direction::N, Direction::S, Direction::E, Direction::W}) {
            const Coord off = offset(d);
            const Coord nb{r + off.row, col + off.col};
            T& np = st.present.cell(nb);
            if (ops.is_zero(np))
                absorb_into_box(st.occ_row_min, st.occ_row_max, st.occ_col_min, st.occ_col_max, nb);
            np = np + share;
            T& pass = st.passages.cell(nb);
            pass = pass + share;
        }
    }
}

template <typename T, typename Ops>
void symmetric_sweep_impl(BasicSymmetricState<T>& st, Ops ops) {
    symmetric_process_column(st, 0, ops);
    for (std::int64_t d = 1; d <= std::max(-st.occ_col_min, st.occ_col_max); ++d) {
        symmetric_process_column(st, -d, ops);
        symmetric_process_column(st, +d, ops);
    }
    ++st.iteration;
}

}  // namespace

SymmetricState make_symmetric_state(std::int64_t ants) {
    return make_symmetric<double>(ants, SymDoubleOps{});
}

SymmetricStateExact make_symmetric_state_exact(std::int64_t ants) {
    return make_symmetric<Dyadic>(ants, SymDyadicOps{});
}

void symmetric_sweep(SymmetricState& state) { symmetric_sweep_impl(state, SymDoubleOps{}); }

void symmetric_sweep(SymmetricStateExact& state) { symmetric_sweep_impl(state, SymDyadicOps{}); }

double max_present(const SymmetricState& state) {
    double best = 0.0;
    state.present.for_each([&](Coord, double v) { best = std::max(best, v); });
    return best;
}

double total_mass(const SymmetricState& state) {
    double sum = 0.0;
    state.present.for_each([&](Coord, double v) { sum += v; });
    return sum;
}

Dyadic total_mass(const SymmetricStateExact& state) {
    Dyadic sum;
    state.present.for_each([&](Coord, const Dyadic& v) { sum = sum + v; });
    return sum;
}

Rr4Diff rr4_model_diff(const SweepState& a, const SymmetricState& b) {
    if (a.iteration != b.iteration)
        throw std::invalid_argument("rr4_model_diff requires states at the same iteration");
    Rr4Diff diff;
    const std::int64_t rmin = std::min(a.occ_row_min, b.occ_row_min);
    const std::int64_t rmax = std::max(a.occ_row_max, b.occ_row_max);
    const std::int64_t cmin = std::min(a.occ_col_min, b.occ_col_min);
    const std::int64_t cmax = std::max(a.occ_col_max, b.occ_col_max);
    diff.present_diff = Grid<double>(rmin, rmax, cmin, cmax);
    diff.passage_diff = Grid<double>(rmin, rmax, cmin, cmax);
    for (std::int64_t r = rmin; r <= rmax; ++r) {
        for (std::int64_t c = cmin; c <= cmax; ++c) {
            const Coord at{r, c};
            const double dp = std::abs(static_cast<double>(a.present.get(at)) - b.present.get(at));
            const double dq = std::abs(static_cast<double>(a.passages.get(at)) - b.passages.get(at));
            if (dp != 0.0) diff.present_diff.set(at, dp);
            if (dq != 0.0) diff.passage_diff.set(at, dq);
            diff.present_sup = std::max(diff.present_sup, dp);
            diff.passage_sup = std::max(diff.passage_sup, dq);
        }
    }
    return diff;
}

SymmetryProbe quasi_symmetry_probe(const SweepState& state) {
    SymmetryProbe probe;
    const std::int64_t extent =
        std::max({-state.occ_row_min, state.occ_row_max, -state.occ_col_min, state.occ_col_max});
    for (std::int64_t r = -extent; r <= extent; ++r) {
        for (std::int64_t c = -extent; c <= extent; ++c) {
            const std::int64_t v = state.present.get({r, c});
            const Coord images[7] = {{r, -c}, {-r, c}, {-r, -c}, {c, r}, {c, -r}, {-c, r}, {-c, -r}};
            for (const Coord& img : images) {
                const std::int64_t dev = std::llabs(v - state.present.get(img));
                if (dev > probe.max_deviation) {
                    probe.max_deviation = dev;
                    probe.site = {r, c};
                }
            }
        }
    }
    return probe;
}

}  // namespace rotor
