#include "zono/zonotope.hpp"

#include <string>

#include "zono/linalg.hpp"

namespace zono {

namespace {

// Calls f(subset, |subset|) for every subset of s.
template <class F>
void for_each_subset(const IndexSet& s, F&& f) {
    const std::size_t k = s.size();
    if (k >= 63) throw ResourceError("ResourceLimit", "subset enumeration limited to 62 elements");
    std::vector<std::size_t> pick;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        pick.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (bits >> i & 1) pick.push_back(s.items()[i]);
        f(IndexSet(pick), pick.size());
    }
}

IndexSet full_set(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return IndexSet(std::move(v));
}

void require_full_dimensional(const Matroid& m) {
    if (static_cast<std::size_t>(m.rank()) != m.dimension())
        throw MathError("NotFullDimensional", "generators span a space of dimension " + std::to_string(m.rank()) +
                                                  " inside dimension " + std::to_string(m.dimension()));
}

// family[m-1] = A_m(d+1, t) or B_m(d+1, t), m = 1..d+1.
std::vector<IntPolynomial> refined_family(int d, ZonotopeMode mode) {
    if (mode == ZonotopeMode::standard) return a_polynomials(d + 1);
    std::vector<IntPolynomial> out;
    for (int l = 0; l <= d; ++l) out.push_back(b_l_polynomial_via_A(d, l));
    return out;
}

HStarVector combine(const std::vector<Rational>& multiplicities, const std::vector<IntPolynomial>& family, int d) {
    RatPolynomial sum;
    for (std::size_t m = 0; m < multiplicities.size(); ++m)
        if (multiplicities[m] != 0) sum += to_rational(family[m]) * multiplicities[m];
    return HStarVector::from_polynomial(sum, d);
}

HStarVector halfopen_parallelepiped(const VectorConfiguration& basis, const IndexSet& removed,
                                    const BoxValuationTable& table, ZonotopeMode mode) {
    const Matroid m(basis);
    const std::size_t r = basis.size();
    if (static_cast<std::size_t>(m.rank()) != r)
        throw MathError("DependentSet", "parallelepiped generators are linearly dependent");
    for (auto i : removed)
        if (i >= r) throw MathError("IndexOutOfRange", "removed facet direction out of range");
    const int deg = static_cast<int>(r);
    std::vector<Rational> mult(r + 1);
    for_each_subset(full_set(r), [&](const IndexSet& k, std::size_t) { mult[set_union(removed, k).size()] += table.at(k); });
    return combine(mult, refined_family(deg, mode), deg);
}

}  // namespace

// ---------------------------------------------------------------------------

void BoxValuationTable::set(const IndexSet& s, Rational value) {
    if (value == 0)
        values_.erase(s);
    else
        values_[s] = std::move(value);
}

Rational BoxValuationTable::at(const IndexSet& s) const {
    auto it = values_.find(s);
    return it == values_.end() ? Rational(0) : it->second;
}

void BoxValuationTable::validate_against(const Matroid& m) const {
    for (const auto& [key, value] : values_) {
        for (auto i : key)
            if (i >= m.size()) throw MathError("IndexOutOfRange", "box table key refers to a missing generator");
        if (!m.is_independent(key)) throw MathError("DependentSet", "box table key is not an independent set");
    }
}

Rational BoxValuationTable::halfopen_box_value(const IndexSet& s) const {
    Rational acc = 0;
    for_each_subset(s, [&](const IndexSet& j, std::size_t) { acc += at(j); });
    return acc;
}

BoxValuationTable operator+(const BoxValuationTable& a, const BoxValuationTable& b) {
    BoxValuationTable out = a;
    for (const auto& [key, value] : b.entries()) out.set(key, out.at(key) + value);
    return out;
}

BoxValuationTable operator*(const Rational& s, const BoxValuationTable& t) {
    BoxValuationTable out;
    for (const auto& [key, value] : t.entries()) out.set(key, s * value);
    return out;
}

Integer box_halfopen_count(const Matroid& m, const IndexSet& independent) { return m.g(independent); }

BoxValuationTable default_box_table(const Matroid& m) {
    BoxValuationTable table;
    std::map<IndexSet, Integer> g;
    const auto independent = m.independent_sets();
    for (const auto& s : independent) g.emplace(s, m.g(s));
    for (const auto& s : independent) {
        Integer b = 0;
        for_each_subset(s, [&](const IndexSet& j, std::size_t size) {
            if ((s.size() - size) % 2 == 0)
                b += g.at(j);
            else
                b -= g.at(j);
        });
        table.set(s, Rational(b));
    }
    return table;
}

RatPolynomial ehrhart_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table) {
    const Matroid m(z.generators);
    std::vector<Rational> coeffs(static_cast<std::size_t>(m.rank()) + 1);
    for (const auto& s : m.independent_sets()) coeffs[s.size()] += table.halfopen_box_value(s);
    if (z.mode == ZonotopeMode::typeB)
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= Rational(Integer(1) << k);
    return RatPolynomial(std::move(coeffs));
}

RatPolynomial ehrhart_zonotope(const ZonotopeSpec& z) {
    return ehrhart_zonotope(z, default_box_table(Matroid(z.generators)));
}

IntPolynomial ehrhart_halfopen_cube(int d, int j) {
    if (d < 0 || j < 0 || j > d) throw MathError("IndexOutOfRange", "need 0 <= j <= d");
    IntPolynomial p = IntPolynomial::monomial(static_cast<std::size_t>(j));
    for (int i = 0; i < d - j; ++i) p = p * IntPolynomial{Integer(1), Integer(1)};
    return p;
}

HStarVector hstar_halfopen_cube(int d, int j) {
    if (d < 0 || j < 0 || j > d) throw MathError("IndexOutOfRange", "need 0 <= j <= d");
    return HStarVector::from_polynomial(a_j_polynomial(d + 1, j + 1), d);
}

HStarVector hstar_halfopen_parallelepiped(const VectorConfiguration& basis, const IndexSet& removed,
                                          const BoxValuationTable& table) {
    return halfopen_parallelepiped(basis, removed, table, ZonotopeMode::standard);
}

HStarVector hstar_typeB_parallelepiped(const VectorConfiguration& basis, const IndexSet& removed,
                                       const BoxValuationTable& table) {
    return halfopen_parallelepiped(basis, removed, table, ZonotopeMode::typeB);
}

HStarBreakdown hstar_breakdown(const ZonotopeSpec& z, const BoxValuationTable& table) {
    const Matroid m(z.generators);
    require_full_dimensional(m);
    const int d = static_cast<int>(m.dimension());
    std::vector<Rational> mult(static_cast<std::size_t>(d) + 1);
    std::vector<IndexSet> passive;
    for (const auto& basis : m.bases()) {
        IndexSet ip = m.internally_passive(basis);
        for_each_subset(basis, [&](const IndexSet& k, std::size_t) { mult[set_union(ip, k).size()] += table.at(k); });
        passive.push_back(std::move(ip));
    }
    HStarVector h = combine(mult, refined_family(d, z.mode), d);
    return HStarBreakdown{m.bases(), std::move(passive), std::move(mult), std::move(h)};
}

HStarVector hstar_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table) {
    if (z.mode != ZonotopeMode::standard) throw MathError("WrongMode", "expected a standard zonotope");
    return hstar_breakdown(z, table).hstar;
}

HStarVector hstar_zonotope(const ZonotopeSpec& z) {
    return hstar_zonotope(z, default_box_table(Matroid(z.generators)));
}

HStarVector hstar_zonotope_by_independent_sets(const ZonotopeSpec& z, const BoxValuationTable& table) {
    if (z.mode != ZonotopeMode::standard) throw MathError("WrongMode", "expected a standard zonotope");
    const Matroid m(z.generators);
    require_full_dimensional(m);
    const int d = static_cast<int>(m.dimension());
    std::vector<IndexSet> passive;
    for (const auto& basis : m.bases()) passive.push_back(m.internally_passive(basis));
    std::vector<Rational> mult(static_cast<std::size_t>(d) + 1);
    for (const auto& s : m.independent_sets()) {
        const Rational b = table.at(s);
        if (b == 0) continue;
        for (std::size_t k = 0; k < m.bases().size(); ++k)
            if (is_subset(s, m.bases()[k])) mult[set_union(s, passive[k]).size()] += b;
    }
    return combine(mult, a_polynomials(d + 1), d);
}

HStarVector hstar_totally_unimodular(const ZonotopeSpec& z) {
    if (z.mode != ZonotopeMode::standard) throw MathError("WrongMode", "expected a standard zonotope");
    const Matroid m(z.generators);
    require_full_dimensional(m);
    const int d = static_cast<int>(m.dimension());
    // Bases are exactly the d-subsets with nonzero maximal minor.
    for (const auto& basis : m.bases()) {
        if (abs(determinant(z.generators.columns(basis))) != 1)
            throw MathError("NotUnimodular", "a maximal minor lies outside {0, 1, -1}");
    }
    std::vector<Rational> mult(static_cast<std::size_t>(d) + 1);
    for (const auto& basis : m.bases()) mult[m.internally_passive(basis).size()] += 1;
    return combine(mult, a_polynomials(d + 1), d);
}

HStarVector hstar_typeB_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table) {
    ZonotopeSpec typed{z.generators, ZonotopeMode::typeB};
    return hstar_breakdown(typed, table).hstar;
}

HStarVector hstar_typeB_zonotope(const ZonotopeSpec& z) {
    return hstar_typeB_zonotope(z, default_box_table(Matroid(z.generators)));
}

HStarVector hstar(const ZonotopeSpec& z, const BoxValuationTable& table) { return hstar_breakdown(z, table).hstar; }

std::vector<Rational> express_in_A_basis(const HStarVector& h) {
    const int d = h.degree();
    const auto family = a_polynomials(d + 1);
    const auto size = static_cast<std::size_t>(d) + 1;
    std::vector<std::vector<Rational>> rows(size, std::vector<Rational>(size));
    for (std::size_t j = 0; j < size; ++j) {
        auto column = family[j].padded(size);
        for (std::size_t i = 0; i < size; ++i) rows[i][j] = column[i];
    }
    auto solution = solve_unique(std::move(rows), h.coefficients());
    if (!solution) throw DisagreementError("SingularBasis", "refined Eulerian polynomials failed to form a basis");
    return *solution;
}

bool is_in_zonotope_cone(const HStarVector& h) {
    const auto c = express_in_A_basis(h);
    if (c[0] != 1) return false;
    for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] < 0) return false;
    return true;
}

namespace {

std::vector<std::vector<std::int64_t>> unit_vectors(int d) {
    std::vector<std::vector<std::int64_t>> v(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) v[i][i] = 1;
    return v;
}

void check_family_range(int d, int k, std::int64_t m) {
    if (d < 1) throw MathError("IndexOutOfRange", "need d >= 1");
    if (k < 1 || k > d) throw MathError("IndexOutOfRange", "generator index k must lie in 1..d");
    if (m < 0) throw MathError("IndexOutOfRange", "multiplicity m must be nonnegative");
}

}  // namespace

ZonotopeSpec pkm_parallelepiped(int d, int k, std::int64_t m) {
    check_family_range(d, k, m);
    auto v = unit_vectors(d);
    for (int i = 0; i < k - 1; ++i) v[k - 1][i] = 1;
    v[k - 1][k - 1] = m + 1;
    return ZonotopeSpec{VectorConfiguration(static_cast<std::size_t>(d), std::move(v)), ZonotopeMode::standard};
}

ZonotopeSpec scaled_generator_parallelepiped(int d, int k, std::int64_t m) {
    check_family_range(d, k, m);
    auto v = unit_vectors(d);
    v[k - 1][k - 1] = m + 1;
    return ZonotopeSpec{VectorConfiguration(static_cast<std::size_t>(d), std::move(v)), ZonotopeMode::standard};
}

bool is_reflexive_by_ehrhart(const RatPolynomial& ehr, int d) {
    const auto c = express_in_shifted_power_basis(ehr, d);
    for (int j = 0; j <= d; ++j)
        if (c[j] != c[d - j]) return false;
    return true;
}

}  // namespace zono
