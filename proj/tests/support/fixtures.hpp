#pragma once

// Small constructors shared by the test executables.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "zono/matroid.hpp"
#include "zono/polynomial.hpp"
#include "zono/zonotope.hpp"

namespace zono::test {

inline HStarVector hv(std::initializer_list<long long> h) {
    std::vector<Rational> v;
    for (long long x : h) v.emplace_back(x);
    return HStarVector(std::move(v), static_cast<int>(h.size()) - 1);
}

inline IntPolynomial ip(std::initializer_list<long long> c) {
    std::vector<Integer> v;
    for (long long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

inline RatPolynomial rp(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return RatPolynomial(std::move(v));
}

inline std::vector<Rational> rv(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return v;
}

inline VectorConfiguration config(std::size_t d, std::vector<std::vector<std::int64_t>> vectors) {
    return VectorConfiguration(d, std::move(vectors));
}

inline ZonotopeSpec make_zonotope(std::size_t d, std::vector<std::vector<std::int64_t>> vectors,
                         ZonotopeMode mode = ZonotopeMode::standard) {
    return ZonotopeSpec{VectorConfiguration(d, std::move(vectors)), mode};
}

inline ZonotopeSpec hexagon(ZonotopeMode mode = ZonotopeMode::standard) {
    return make_zonotope(2, {{1, 0}, {0, 1}, {1, 1}}, mode);
}

inline ZonotopeSpec unit_cube(int d, ZonotopeMode mode = ZonotopeMode::standard) {
    std::vector<std::vector<std::int64_t>> v(static_cast<std::size_t>(d), std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i) v[i][i] = 1;
    return make_zonotope(static_cast<std::size_t>(d), std::move(v), mode);
}

}  // namespace zono::test
