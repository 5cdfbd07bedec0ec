#include "rotor/abelian_rr2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

// Halving with the scheme's two rounding modes. Truncation in C++ already
// rounds toward zero; toward +infinity needs the bump only for x >= 0.
std::int64_t half_toward_zero(std::int64_t x) { return x / 2; }
std::int64_t half_toward_pos_inf(std::int64_t x) { return x >= 0 ? (x + 1) / 2 : x / 2; }

std::uint64_t binomial_u64(int n, int p) {
    // multiplicative form; every prefix is itself a binomial coefficient
    unsigned __int128 c = 1;
    for (int i = 1; i <= p; ++i) c = c * static_cast<unsigned>(n - p + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(c);
}

}  // namespace

std::int64_t CountField::value(std::int64_t row, std::int64_t col) const {
    if (row < 0 || row >= static_cast<std::int64_t>(rows.size())) return 0;
    if (col < -row || col > row || (col + row) % 2 != 0) return 0;
    return rows[static_cast<std::size_t>(row)][static_cast<std::size_t>((col + row) / 2)];
}

std::int64_t CountField::occupied_count() const {
    std::int64_t count = 0;
    for (const auto& row : rows)
        for (std::int64_t v : row)
            if (v >= 1) ++count;
    return count;
}

RealField to_real(const DyadicField& field) {
    RealField out;
    out.ants = field.ants;
    out.rows.reserve(field.rows.size());
    for (const auto& row : field.rows) {
        std::vector<double> line;
        line.reserve(row.size());
        for (const Dyadic& v : row) line.push_back(v.to_double());
        out.rows.push_back(std::move(line));
    }
    return out;
}

CountField rr2_scheme(std::int64_t ants) {
    if (ants < 1) throw std::invalid_argument("rr2_scheme requires at least one ant");
    CountField field;
    field.ants = ants;
    field.rows.push_back({ants});
    while (true) {
        const auto& prev = field.rows.back();
        const std::int64_t n = static_cast<std::int64_t>(field.rows.size());
        std::vector<std::int64_t> next(static_cast<std::size_t>(n + 1), 0);
        bool any = false;
        for (std::int64_t p = 0; p <= n; ++p) {
            // parents of slot p in row n are slots p-1 (west) and p (east) of row n-1
            std::int64_t west = (p >= 1) ? prev[static_cast<std::size_t>(p - 1)] : 0;
            std::int64_t east = (p <= n - 1) ? prev[static_cast<std::size_t>(p)] : 0;
            std::int64_t v = half_toward_pos_inf(west - 1) + half_toward_zero(east - 1);
            next[static_cast<std::size_t>(p)] = v;
            any = any || v != 0;
        }
        if (!any) break;
        field.rows.push_back(std::move(next));
    }
    return field;
}

Theorem1Report check_theorem1(const CountField& field, std::int64_t ants) {
    Theorem1Report report;
    const bool even = ants % 2 == 0;
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(field.rows.size()); ++n) {
        for (std::int64_t c = (n % 2 == 0) ? 2 : 1; c <= n; c += 2) {
            std::int64_t west = field.value(n, -c);
            std::int64_t east = field.value(n, c);
            if (west < 1 || east < 1) continue;
            std::int64_t delta = east - west;
            report.max_pair_delta = std::max(report.max_pair_delta, std::llabs(delta));
            const bool good = even ? delta == 1 : (delta == 0 || delta == 1);
            if (!good) report.violations.push_back({n, c, west, east});
        }
    }
    return report;
}

double asymptotic_prob(int row, int slot) {
    if (row < 0 || row > 60 || slot < 0 || slot > row)
        throw std::invalid_argument("asymptotic_prob requires 0 <= slot <= row <= 60");
    return std::ldexp(static_cast<double>(binomial_u64(row, slot)), -row);
}

namespace {

// Shared generator for both binomial backends: rows of the untruncated
// halved Pascal triangle seeded with t, optionally truncated (< 1 -> 0) on
// store. Generation stops once no untruncated value reaches 1, or at
// max_row.
template <typename T, typename Ops>
BasicRealField<T> binomial_rows(std::int64_t ants, std::int64_t max_row, bool truncate, Ops ops) {
    if (ants < 1) throw std::invalid_argument("binomial model requires at least one ant");
    if (max_row < 0) throw std::invalid_argument("max_row must be nonnegative");
    BasicRealField<T> field;
    field.ants = ants;
    std::vector<T> untrunc{ops.from_int(ants)};
    field.rows.push_back(untrunc);
    for (std::int64_t n = 1; n <= max_row; ++n) {
        std::vector<T> next(static_cast<std::size_t>(n + 1));
        bool any = false;
        for (std::int64_t p = 0; p <= n; ++p) {
            T west = (p >= 1) ? untrunc[static_cast<std::size_t>(p - 1)] : T{};
            T east = (p <= n - 1) ? untrunc[static_cast<std::size_t>(p)] : T{};
            next[static_cast<std::size_t>(p)] = ops.half_sum(west, east);
            any = any || ops.at_least_one(next[static_cast<std::size_t>(p)]);
        }
        if (!any) break;
        untrunc = next;
        if (truncate)
            for (T& v : next)
                if (!ops.at_least_one(v)) v = T{};
        field.rows.push_back(std::move(next));
    }
    return field;
}

struct DoubleOps {
    double from_int(std::int64_t v) const { return static_cast<double>(v); }
    double half_sum(double a, double b) const { return (a + b) * 0.5; }
    bool at_least_one(double v) const { return v >= 1.0; }
};

struct DyadicOps {
    Dyadic from_int(std::int64_t v) const { return Dyadic(static_cast<std::uint64_t>(v)); }
    Dyadic half_sum(const Dyadic& a, const Dyadic& b) const { return (a + b).half(); }
    bool at_least_one(const Dyadic& v) const { return v.at_least_one(); }
};

}  // namespace

RealField binomial_field(std::int64_t ants, std::int64_t max_row) {
    return binomial_rows<double>(ants, max_row, true, DoubleOps{});
}

DyadicField binomial_field_exact(std::int64_t ants, std::int64_t max_row) {
    return binomial_rows<Dyadic>(ants, max_row, true, DyadicOps{});
}

DyadicField binomial_untruncated_exact(std::int64_t ants, std::int64_t max_row) {
    return binomial_rows<Dyadic>(ants, max_row, false, DyadicOps{});
}

namespace {

template <typename T, typename Ops>
BasicRealField<T> symmetric_rows(std::int64_t ants, Ops ops) {
    if (ants < 1) throw std::invalid_argument("symmetric_rr2 requires at least one ant");
    BasicRealField<T> field;
    field.ants = ants;
    field.rows.push_back({ops.from_int(ants)});
    while (true) {
        const auto& prev = field.rows.back();
        bool distributing = false;
        for (const T& v : prev) distributing = distributing || ops.at_least_one(v);
        if (!distributing) break;
        const std::int64_t n = static_cast<std::int64_t>(field.rows.size());
        std::vector<T> next(static_cast<std::size_t>(n + 1));
        bool any = false;
        for (std::int64_t p = 0; p <= n; ++p) {
            T v{};
            if (p >= 1) {
                const T& west = prev[static_cast<std::size_t>(p - 1)];
                if (ops.at_least_one(west)) v = v + ops.share(west);
            }
            if (p <= n - 1) {
                const T& east = prev[static_cast<std::size_t>(p)];
                if (ops.at_least_one(east)) v = v + ops.share(east);
            }
            any = any || !ops.is_zero(v);
            next[static_cast<std::size_t>(p)] = std::move(v);
        }
        if (!any) break;  // nothing arrived (t = 1): no new row to keep
        field.rows.push_back(std::move(next));
    }
    return field;
}

struct SymDoubleOps {
    double from_int(std::int64_t v) const { return static_cast<double>(v); }
    double share(double v) const { return (v - 1.0) * 0.5; }
    bool at_least_one(double v) const { return v >= 1.0; }
    bool is_zero(double v) const { return v == 0.0; }
};

struct SymDyadicOps {
    Dyadic from_int(std::int64_t v) const { return Dyadic(static_cast<std::uint64_t>(v)); }
    Dyadic share(const Dyadic& v) const { return v.minus_one().half(); }
    bool at_least_one(const Dyadic& v) const { return v.at_least_one(); }
    bool is_zero(const Dyadic& v) const { return v.is_zero(); }
};

}  // namespace

RealField symmetric_rr2(std::int64_t ants) { return symmetric_rows<double>(ants, SymDoubleOps{}); }

DyadicField symmetric_rr2_exact(std::int64_t ants) {
    return symmetric_rows<Dyadic>(ants, SymDyadicOps{});
}

Rr2Diff rr2_diff(const CountField& a, const RealField& b) {
    if (a.ants != b.ants) throw std::invalid_argument("rr2_diff requires fields from the same run");
    Rr2Diff result;
    result.diff.ants = a.ants;
    const std::int64_t rows = std::max(static_cast<std::int64_t>(a.rows.size()),
                                       static_cast<std::int64_t>(b.rows.size()));
    for (std::int64_t n = 0; n < rows; ++n) {
        std::vector<double> line(static_cast<std::size_t>(n + 1), 0.0);
        for (std::int64_t p = 0; p <= n; ++p) {
            const std::int64_t col = -n + 2 * p;
            const double d = std::abs(static_cast<double>(a.value(n, col)) - b.value(n, col));
            line[static_cast<std::size_t>(p)] = d;
            result.sup = std::max(result.sup, d);
        }
        result.diff.rows.push_back(std::move(line));
    }
    return result;
}

}  // namespace rotor
