#pragma once

// Formula-independent ground truth: exact membership in dilated zonotopes,
// brute-force lattice-point counts and Ehrhart interpolation.

#include <cstdint>
#include <vector>

#include "zono/polynomial.hpp"
#include "zono/zonotope.hpp"

namespace zono {

/// Linear constraint sum_k coeffs[k] * p_k + dilation * n  (>= 0 or == 0).
struct ProjectedConstraint {
    std::vector<std::int64_t> coeffs;
    std::int64_t dilation = 0;
    bool equality = false;
};

/// Integer description of { p : p = sum lambda_i v_i, lambda in [0,n]^m }
/// (or [-n,n]^m for type B), obtained by eliminating the lambda variables
/// exactly with Fourier-Motzkin. Valid for every dilation n >= 0 at once.
class ZonotopeMembership {
public:
    static constexpr std::size_t kMaxConstraints = 200000;

    explicit ZonotopeMembership(const ZonotopeSpec& z);

    std::size_t dimension() const { return dim_; }
    const std::vector<ProjectedConstraint>& constraints() const { return constraints_; }
    bool contains(std::int64_t n, const std::vector<std::int64_t>& point) const;

private:
    std::size_t dim_;
    std::vector<ProjectedConstraint> constraints_;
};

bool contains_point(const ZonotopeSpec& z, std::int64_t n, const std::vector<std::int64_t>& point);

inline constexpr std::uint64_t kMaxBoxPoints = 10'000'000;

/// Number of integer points of the axis-parallel bounding box of nZ.
Integer bounding_box_size(const ZonotopeSpec& z, std::int64_t n);

/// |nZ intersected with Z^d| by scanning the bounding box.
Integer count_lattice_points(const ZonotopeSpec& z, std::int64_t n);
/// Counts for n = 0..max_n.
std::vector<Integer> count_series(const ZonotopeSpec& z, std::int64_t max_n);

/// Polynomial of degree <= r through (n, counts[n]), n = 0..r, by Newton
/// differences. Any further counts must lie on it, else MathError.
RatPolynomial interpolate_ehrhart(const std::vector<Integer>& counts, int r);

/// Ehrhart polynomial from counts n = 0..rank+1.
RatPolynomial ehrhart_via_oracle(const ZonotopeSpec& z);
/// h* from counts n = 0..d+1; requires a full-dimensional configuration.
HStarVector hstar_via_oracle(const ZonotopeSpec& z);

}  // namespace zono
