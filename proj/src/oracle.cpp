#include "zono/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace zono {

namespace {

using Row = std::vector<Integer>;

void normalize(Row& row, bool equality) {
    Integer g = 0;
    for (const auto& c : row) g = gcd(g, abs(c));
    if (g > 1)
        for (auto& c : row) c /= g;
    if (equality) {
        auto lead = std::find_if(row.begin(), row.end(), [](const Integer& c) { return c != 0; });
        if (lead != row.end() && *lead < 0)
            for (auto& c : row) c = -c;
    }
}

bool is_zero_row(const Row& row) {
    return std::all_of(row.begin(), row.end(), [](const Integer& c) { return c == 0; });
}

// Eliminate column `col` from `row` using `pivot`, an equality whose entry
// at `col` is nonzero. Scales `row` by a positive factor, so inequalities keep
// their direction.
Row eliminate_with(const Row& row, const Row& pivot, std::size_t col) {
    const Integer& a = row[col];
    if (a == 0) return row;
    const Integer scale = abs(pivot[col]);
    const Integer factor = pivot[col] > 0 ? a : Integer(-a);
    Row out(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) out[k] = scale * row[k] - factor * pivot[k];
    return out;
}

std::int64_t narrow(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() / 4 || z < std::numeric_limits<std::int64_t>::min() / 4)
        throw ResourceError("ResourceLimit", "projected constraint coefficient exceeds 64-bit range");
    return static_cast<std::int64_t>(z);
}

}  // namespace

ZonotopeMembership::ZonotopeMembership(const ZonotopeSpec& z) : dim_(z.generators.dimension()) {
    const std::size_t m = z.generators.size();
    const std::size_t d = dim_;
    const std::size_t width = m + d + 1;  // lambda_0..lambda_{m-1}, p_0..p_{d-1}, n
    const std::size_t n_col = m + d;

    std::vector<Row> inequalities, equalities;
    for (std::size_t i = 0; i < m; ++i) {
        Row lower(width), upper(width);
        lower[i] = 1;
        if (z.mode == ZonotopeMode::typeB) lower[n_col] = 1;
        upper[i] = -1;
        upper[n_col] = 1;
        inequalities.push_back(std::move(lower));
        inequalities.push_back(std::move(upper));
    }
    for (std::size_t k = 0; k < d; ++k) {
        Row eq(width);
        for (std::size_t i = 0; i < m; ++i) eq[i] = z.generators[i][k];
        eq[m + k] = -1;
        equalities.push_back(std::move(eq));
    }

    // Solve equalities for lambda variables where possible.
    std::vector<Row> parameter_equalities;
    while (!equalities.empty()) {
        Row eq = std::move(equalities.back());
        equalities.pop_back();
        std::size_t col = 0;
        while (col < m && eq[col] == 0) ++col;
        if (col == m) {
            normalize(eq, true);
            if (!is_zero_row(eq)) parameter_equalities.push_back(std::move(eq));
            continue;
        }
        for (auto& row : equalities) {
            row = eliminate_with(row, eq, col);
            normalize(row, true);
        }
        for (auto& row : parameter_equalities) row = eliminate_with(row, eq, col);
        for (auto& row : inequalities) {
            row = eliminate_with(row, eq, col);
            normalize(row, false);
        }
    }

    // Fourier-Motzkin on the lambda variables that remain.
    std::set<Row> current;
    for (auto& row : inequalities)
        if (!is_zero_row(row)) current.insert(std::move(row));
    while (true) {
        std::size_t best = m;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t pos = 0, neg = 0;
            for (const auto& row : current) {
                if (row[col] > 0) ++pos;
                if (row[col] < 0) ++neg;
            }
            if (pos + neg == 0) continue;
            const std::size_t cost = pos * neg;
            if (cost < best_cost) {
                best_cost = cost;
                best = col;
            }
        }
        if (best == m) break;

        std::vector<const Row*> pos, neg;
        std::set<Row> next;
        for (const auto& row : current) {
            if (row[best] > 0)
                pos.push_back(&row);
            else if (row[best] < 0)
                neg.push_back(&row);
            else
                next.insert(row);
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                const Integer a = (*p)[best], b = -(*q)[best];
                Row combo(width);
                for (std::size_t k = 0; k < width; ++k) combo[k] = b * (*p)[k] + a * (*q)[k];
                normalize(combo, false);
                if (!is_zero_row(combo)) next.insert(std::move(combo));
            }
            if (next.size() > kMaxConstraints)
                throw ResourceError("ResourceLimit", "Fourier-Motzkin elimination exceeded " +
                                                         std::to_string(kMaxConstraints) + " constraints");
        }
        current = std::move(next);
    }

    auto emit = [&](const Row& row, bool equality) {
        ProjectedConstraint c;
        c.equality = equality;
        for (std::size_t k = 0; k < d; ++k) c.coeffs.push_back(narrow(row[m + k]));
        c.dilation = narrow(row[n_col]);
        constraints_.push_back(std::move(c));
    };
    for (const auto& row : parameter_equalities) emit(row, true);
    for (const auto& row : current) emit(row, false);
}

bool ZonotopeMembership::contains(std::int64_t n, const std::vector<std::int64_t>& point) const {
    if (point.size() != dim_) throw MathError("DimensionMismatch", "point dimension differs from the zonotope's");
    if (n < 0) throw MathError("InvalidArgument", "dilation factor must be nonnegative");
    for (const auto& c : constraints_) {
        __int128 acc = static_cast<__int128>(c.dilation) * n;
        for (std::size_t k = 0; k < dim_; ++k) acc += static_cast<__int128>(c.coeffs[k]) * point[k];
        if (c.equality ? acc != 0 : acc < 0) return false;
    }
    return true;
}

bool contains_point(const ZonotopeSpec& z, std::int64_t n, const std::vector<std::int64_t>& point) {
    return ZonotopeMembership(z).contains(n, point);
}

namespace {

struct Box {
    std::vector<std::int64_t> lo, hi;
};

Box bounding_box(const ZonotopeSpec& z, std::int64_t n) {
    const std::size_t d = z.generators.dimension();
    Box box{std::vector<std::int64_t>(d, 0), std::vector<std::int64_t>(d, 0)};
    for (std::size_t k = 0; k < d; ++k) {
        for (const auto& v : z.generators.vectors()) {
            if (z.mode == ZonotopeMode::typeB) {
                box.lo[k] -= n * std::abs(v[k]);
                box.hi[k] += n * std::abs(v[k]);
            } else {
                box.lo[k] += n * std::min<std::int64_t>(0, v[k]);
                box.hi[k] += n * std::max<std::int64_t>(0, v[k]);
            }
        }
    }
    return box;
}

}  // namespace

Integer bounding_box_size(const ZonotopeSpec& z, std::int64_t n) {
    const Box box = bounding_box(z, n);
    Integer size = 1;
    for (std::size_t k = 0; k < box.lo.size(); ++k) size *= Integer(box.hi[k] - box.lo[k] + 1);
    return size;
}

namespace {

Integer count_with(const ZonotopeMembership& membership, const ZonotopeSpec& z, std::int64_t n) {
    if (n < 0) throw MathError("InvalidArgument", "dilation factor must be nonnegative");
    const Integer size = bounding_box_size(z, n);
    if (size > kMaxBoxPoints)
        throw ResourceError("ResourceLimit", "bounding box of the dilate has " + size.str() +
                                                 " integer points, above the limit of " + std::to_string(kMaxBoxPoints));
    const Box box = bounding_box(z, n);
    const std::size_t d = box.lo.size();
    std::vector<std::int64_t> p = box.lo;
    std::uint64_t count = 0;
    while (true) {
        if (membership.contains(n, p)) ++count;
        std::size_t k = 0;
        while (k < d && p[k] == box.hi[k]) {
            p[k] = box.lo[k];
            ++k;
        }
        if (k == d) break;
        ++p[k];
    }
    return Integer(count);
}

}  // namespace

Integer count_lattice_points(const ZonotopeSpec& z, std::int64_t n) {
    return count_with(ZonotopeMembership(z), z, n);
}

std::vector<Integer> count_series(const ZonotopeSpec& z, std::int64_t max_n) {
    const ZonotopeMembership membership(z);
    std::vector<Integer> counts;
    for (std::int64_t n = 0; n <= max_n; ++n) counts.push_back(count_with(membership, z, n));
    return counts;
}

RatPolynomial interpolate_ehrhart(const std::vector<Integer>& counts, int r) {
    if (r < 0) throw MathError("InvalidArgument", "degree must be nonnegative");
    if (counts.size() < static_cast<std::size_t>(r) + 1)
        throw MathError("TooFewValues", "need at least degree+1 counts to interpolate");
    // Newton forward differences: p(n) = sum_k (Delta^k f)(0) C(n, k).
    std::vector<Integer> diff(counts.begin(), counts.begin() + r + 1);
    RatPolynomial result;
    RatPolynomial falling{Rational(1)};  // n (n-1) ... (n-k+1) / k!
    for (int k = 0; k <= r; ++k) {
        result += falling * Rational(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        falling = falling * RatPolynomial{Rational(-k, k + 1), Rational(1, k + 1)};
    }
    for (std::size_t n = static_cast<std::size_t>(r) + 1; n < counts.size(); ++n) {
        if (result(Rational(static_cast<long long>(n))) != Rational(counts[n]))
            throw MathError("DegreeUnderestimated", "count at n = " + std::to_string(n) +
                                                        " is off the interpolating polynomial");
    }
    return result;
}

RatPolynomial ehrhart_via_oracle(const ZonotopeSpec& z) {
    const int r = Matroid(z.generators).rank();
    return interpolate_ehrhart(count_series(z, r + 1), r);
}

HStarVector hstar_via_oracle(const ZonotopeSpec& z) {
    const Matroid m(z.generators);
    const int d = static_cast<int>(m.dimension());
    if (m.rank() != d)
        throw MathError("NotFullDimensional", "generators span a space of dimension " + std::to_string(m.rank()) +
                                                  " inside dimension " + std::to_string(d));
    return hstar_from_ehrhart(interpolate_ehrhart(count_series(z, d + 1), d), d);
}

}  // namespace zono
