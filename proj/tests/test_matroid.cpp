#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "support/fixtures.hpp"
#include "zono/matroid.hpp"

using namespace zono;
using namespace zono::test;

namespace {

using Sets = std::vector<IndexSet>;

Matroid hexagon_matroid() { return Matroid(config(2, {{1, 0}, {0, 1}, {1, 1}})); }

VectorConfiguration random_config(std::mt19937& rng, int d, int n, int bound) {
    std::uniform_int_distribution<std::int64_t> e(-bound, bound);
    std::vector<std::vector<std::int64_t>> v(static_cast<std::size_t>(n), std::vector<std::int64_t>(d));
    for (auto& row : v)
        for (auto& x : row) x = e(rng);
    return VectorConfiguration(static_cast<std::size_t>(d), std::move(v));
}

}  // namespace

TEST_CASE("IndexSet validation") {
    CHECK(IndexSet{2, 0}.items() == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(IndexSet({1, 1}), MathError);
    CHECK(IndexSet::from_mask(0b101) == IndexSet{0, 2});
    CHECK(IndexSet{0, 2}.mask() == 0b101);
    CHECK(set_union(IndexSet{0}, IndexSet{2}) == IndexSet{0, 2});
    CHECK(is_subset(IndexSet{2}, IndexSet{0, 2}));
    CHECK_FALSE(is_subset(IndexSet{1}, IndexSet{0, 2}));
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(config(2, {{1, 0}, {1}}), MathError);
    std::vector<std::vector<std::int64_t>> many(Matroid::kMaxElements + 1, std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(Matroid(config(1, many)), ResourceError);
}

TEST_CASE("rank examples") {
    const auto m = hexagon_matroid();
    CHECK(m.rank(IndexSet{}) == 0);
    CHECK(m.rank(IndexSet{0, 1, 2}) == 2);
    CHECK(m.rank() == 2);
    const Matroid loop(config(2, {{0, 0}, {1, 0}}));
    CHECK(loop.rank(IndexSet{0}) == 0);
}

TEST_CASE("independent_sets examples") {
    CHECK(hexagon_matroid().independent_sets() ==
          Sets{IndexSet{}, IndexSet{0}, IndexSet{1}, IndexSet{2}, IndexSet{0, 1}, IndexSet{0, 2}, IndexSet{1, 2}});
    CHECK(Matroid(config(2, {{0, 0}})).independent_sets() == Sets{IndexSet{}});
    CHECK(Matroid(config(2, {{2, 0}})).independent_sets() == Sets{IndexSet{}, IndexSet{0}});
}

TEST_CASE("bases examples") {
    CHECK(hexagon_matroid().bases() == Sets{IndexSet{0, 1}, IndexSet{0, 2}, IndexSet{1, 2}});
    CHECK(Matroid(config(2, {{1, 0}, {2, 0}, {0, 1}})).bases() == Sets{IndexSet{0, 2}, IndexSet{1, 2}});
    CHECK(Matroid(config(2, {{1, 0}})).bases() == Sets{IndexSet{0}});
    CHECK(Matroid(config(2, {{0, 0}})).bases() == Sets{IndexSet{}});
}

TEST_CASE("g examples") {
    CHECK(hexagon_matroid().g(IndexSet{}) == 1);
    CHECK(Matroid(config(2, {{1, 1}, {1, -1}})).g(IndexSet{0, 1}) == 2);
    CHECK(Matroid(config(2, {{2, 4}})).g(IndexSet{0}) == 2);
    CHECK_THROWS_AS(Matroid(config(2, {{1, 0}, {2, 0}})).g(IndexSet{0, 1}), MathError);
}

TEST_CASE("internally_passive examples") {
    const auto m = hexagon_matroid();
    CHECK(m.internally_passive(IndexSet{0, 1}) == IndexSet{});
    CHECK(m.internally_passive(IndexSet{0, 2}) == IndexSet{2});
    CHECK(m.internally_passive(IndexSet{1, 2}) == IndexSet{1, 2});
    CHECK(Matroid(config(2, {{1, 0}})).internally_passive(IndexSet{0}) == IndexSet{});
    CHECK_THROWS_AS(m.internally_passive(IndexSet{0}), MathError);
}

TEST_CASE("reversed order changes passivity") {
    const Matroid m(config(2, {{1, 0}, {0, 1}, {1, 1}}), ElementOrder::reversed);
    CHECK(m.precedes(2, 0));
    CHECK(m.bases().front() == IndexSet{1, 2});
    CHECK(m.internally_passive(IndexSet{1, 2}) == IndexSet{});
    CHECK(m.internally_passive(IndexSet{0, 1}) == IndexSet{0, 1});
}

TEST_CASE("min_basis_containing examples") {
    const auto m = hexagon_matroid();
    CHECK(m.min_basis_containing(IndexSet{2}) == IndexSet{0, 2});
    CHECK(m.min_basis_containing(IndexSet{1, 2}) == IndexSet{1, 2});
    CHECK(m.min_basis_containing(IndexSet{}) == m.bases().front());
}

TEST_CASE("is_coloop_free examples") {
    CHECK(hexagon_matroid().is_coloop_free());
    CHECK_FALSE(Matroid(config(2, {{1, 0}, {0, 1}})).is_coloop_free());
    CHECK(Matroid(config(2, {{1, 0}, {2, 0}})).is_coloop_free());
}

TEST_CASE("lemmas on minimal bases and internally passive sets") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 4), reverse(0, 1);
    int configs = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int d = dim(rng);
        std::uniform_int_distribution<int> size(1, 7);
        const Matroid m(random_config(rng, d, size(rng), 2),
                        reverse(rng) ? ElementOrder::reversed : ElementOrder::natural);
        ++configs;
        const auto bases = m.bases();
        REQUIRE_FALSE(bases.empty());
        CHECK(m.internally_passive(bases.front()).empty());
        for (std::size_t k = 1; k < bases.size(); ++k) CHECK(m.lex_less(bases[k - 1], bases[k]));

        std::map<IndexSet, std::size_t> fiber;
        const auto independent = m.independent_sets();
        for (const auto& i : independent) {
            const auto floor_i = m.min_basis_containing(i);
            CHECK(m.is_basis(floor_i));
            ++fiber[floor_i];
            for (const auto& b : bases) {
                if (!is_subset(i, b)) continue;
                CHECK(m.lex_less(floor_i, b) == (floor_i != b));
                const auto ip = m.internally_passive(b);
                CHECK(is_subset(ip, b));
                CHECK((floor_i == b) == is_subset(ip, i));
                if (floor_i != b) {
                    bool found = false;
                    for (auto e : ip) {
                        std::vector<std::size_t> rest;
                        for (auto x : b)
                            if (x != e) rest.push_back(x);
                        if (is_subset(i, IndexSet(rest))) found = true;
                    }
                    CHECK(found);
                }
            }
        }
        // Fibers {I : IP(B) <= I <= B} partition the independent sets.
        std::size_t total = 0;
        for (const auto& b : bases) {
            const auto expected = std::size_t{1} << (b.size() - m.internally_passive(b).size());
            CHECK(fiber[b] == expected);
            total += fiber[b];
        }
        CHECK(total == independent.size());
    }
    CHECK(configs == 120);
}

TEST_CASE("g is invariant under unimodular transformations") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(1, 4), small(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = dim(rng);
        const auto base = random_config(rng, d, d + 2, 3);
        // Random product of elementary row operations.
        std::vector<std::vector<std::int64_t>> u(d, std::vector<std::int64_t>(d, 0));
        for (int i = 0; i < d; ++i) u[i][i] = 1;
        std::uniform_int_distribution<int> row(0, d - 1);
        for (int step = 0; step < 6 && d > 1; ++step) {
            const int a = row(rng), b = row(rng);
            if (a == b) continue;
            const int f = small(rng);
            for (int c = 0; c < d; ++c) u[a][c] += f * u[b][c];
        }
        std::vector<std::vector<std::int64_t>> moved;
        for (const auto& v : base.vectors()) {
            std::vector<std::int64_t> w(d, 0);
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) w[i] += u[i][k] * v[k];
            moved.push_back(w);
        }
        const Matroid m1(base), m2(VectorConfiguration(d, moved));
        CHECK(m1.independent_sets() == m2.independent_sets());
        for (const auto& i : m1.independent_sets()) CHECK(m1.g(i) == m2.g(i));
    }
}
