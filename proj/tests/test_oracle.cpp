#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/corpus.hpp"
#include "support/facet_oracle.hpp"
#include "support/fixtures.hpp"
#include "zono/oracle.hpp"

using namespace zono;
using namespace zono::test;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
    std::vector<Integer> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

bool facet_contains(const std::vector<Slab>& slabs, std::int64_t n, const std::vector<std::int64_t>& p) {
    for (const auto& s : slabs) {
        std::int64_t dot = 0;
        for (std::size_t k = 0; k < p.size(); ++k) dot += s.normal[k] * p[k];
        if (dot < n * s.low || dot > n * s.high) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("contains_point examples") {
    const auto z = hexagon();
    CHECK(contains_point(z, 1, {2, 1}));
    CHECK(contains_point(z, 1, {2, 2}));
    CHECK_FALSE(contains_point(z, 1, {3, 0}));
    CHECK(contains_point(z, 0, {0, 0}));
    CHECK_FALSE(contains_point(z, 0, {1, 0}));
    CHECK_THROWS_AS(contains_point(z, 1, {1}), MathError);
    CHECK_THROWS_AS(contains_point(z, -1, {0, 0}), MathError);
}

TEST_CASE("count_lattice_points examples") {
    const auto z = hexagon();
    CHECK(count_lattice_points(z, 1) == 7);
    CHECK(count_lattice_points(z, 2) == 19);
    CHECK(count_lattice_points(z, 0) == 1);
    CHECK(count_lattice_points(make_zonotope(3, {{1, 2, 3}, {-3, 0, 1}}), 0) == 1);
    CHECK(count_lattice_points(unit_cube(2, ZonotopeMode::typeB), 1) == 9);
}

TEST_CASE("resource guard reports the box size") {
    const auto big = make_zonotope(3, {{100, 0, 0}, {0, 100, 0}, {0, 0, 100}});
    CHECK(bounding_box_size(big, 3) == Integer(301) * 301 * 301);
    try {
        count_lattice_points(big, 3);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.code() == "ResourceLimit");
        CHECK(std::string(e.what()).find("27270901") != std::string::npos);
    }
}

TEST_CASE("interpolate_ehrhart examples") {
    CHECK(interpolate_ehrhart(ints({1, 7, 19}), 2) == rp({1, 3, 3}));
    CHECK(interpolate_ehrhart(ints({1, 5, 13}), 2) == rp({1, 2, 2}));
    for (int r = 0; r <= 2; ++r) CHECK(interpolate_ehrhart(ints({1, 1, 1}), r) == rp({1}));
    CHECK(interpolate_ehrhart(ints({1, 7, 19, 37}), 2) == rp({1, 3, 3}));
    CHECK_THROWS_AS(interpolate_ehrhart(ints({1, 7, 19, 38}), 2), MathError);
    CHECK_THROWS_AS(interpolate_ehrhart(ints({1, 7}), 2), MathError);
}

TEST_CASE("hstar_via_oracle examples") {
    CHECK(hstar_via_oracle(hexagon()) == hv({1, 4, 1}));
    CHECK(hstar_via_oracle(make_zonotope(2, {{1, 1}, {1, -1}})) == hv({1, 2, 1}));
    CHECK(hstar_via_oracle(unit_cube(2, ZonotopeMode::typeB)) == hv({1, 6, 1}));
    CHECK(hstar_via_oracle(make_zonotope(2, {{1, 0}, {1, 4}})) == hv({1, 4, 3}));
    CHECK_THROWS_AS(hstar_via_oracle(make_zonotope(2, {{1, 1}, {2, 2}})), MathError);
    CHECK(ehrhart_via_oracle(make_zonotope(2, {{1, 1}, {2, 2}})) == rp({1, 3}));
}

TEST_CASE("projected description matches the facet description pointwise") {
    CorpusOptions options;
    options.seed = 555;
    options.count = 60;
    for (const auto& v : random_corpus(options)) {
        for (auto mode : {ZonotopeMode::standard, ZonotopeMode::typeB}) {
            const ZonotopeSpec z{v, mode};
            const ZonotopeMembership membership(z);
            const auto slabs = facet_slabs(z);
            const std::size_t d = v.dimension();
            for (std::int64_t n = 0; n <= 2; ++n) {
                std::vector<std::int64_t> p(d, -12);
                while (true) {
                    CHECK(membership.contains(n, p) == facet_contains(slabs, n, p));
                    std::size_t k = 0;
                    while (k < d && p[k] == 12) p[k++] = -12;
                    if (k == d) break;
                    ++p[k];
                }
            }
        }
    }
}

TEST_CASE("counts are monotone and invariant under reordering and negation") {
    CorpusOptions options;
    options.seed = 9;
    options.count = 40;
    std::mt19937 rng(1);
    for (const auto& v : random_corpus(options)) {
        const ZonotopeSpec z{v, ZonotopeMode::standard};
        const auto counts = count_series(z, 3);
        CHECK(counts[0] == 1);
        for (std::size_t n = 1; n < counts.size(); ++n) CHECK(counts[n] >= counts[n - 1]);

        auto vectors = v.vectors();
        std::shuffle(vectors.begin(), vectors.end(), rng);
        for (auto& x : vectors[0]) x = -x;
        const ZonotopeSpec moved{VectorConfiguration(v.dimension(), vectors), ZonotopeMode::standard};
        CHECK(count_series(moved, 3) == counts);

        // Type B is symmetric about the origin, so negation preserves membership.
        const ZonotopeSpec zb{v, ZonotopeMode::typeB};
        const ZonotopeSpec mb{VectorConfiguration(v.dimension(), vectors), ZonotopeMode::typeB};
        const ZonotopeMembership a(zb), b(mb);
        std::vector<std::int64_t> p(v.dimension(), -6);
        while (true) {
            CHECK(a.contains(1, p) == b.contains(1, p));
            std::size_t k = 0;
            while (k < p.size() && p[k] == 6) p[k++] = -6;
            if (k == p.size()) break;
            ++p[k];
        }
    }
}
