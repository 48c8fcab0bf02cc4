#pragma once

// Ehrhart and h*-polynomials of lattice zonotopes, half-open cubes and
// parallelepipeds, and their type-B (centrally symmetric) counterparts.
//
// A translation-invariant valuation phi enters only through its values on
// relatively open boxes, b(I) = phi(open box spanned by I), collected in a
// BoxValuationTable. The default table is the one of the lattice-point count.

#include <cstdint>
#include <map>
#include <vector>

#include "zono/eulerian.hpp"
#include "zono/matroid.hpp"
#include "zono/polynomial.hpp"

namespace zono {

enum class ZonotopeMode {
    standard,  // coefficients in [0, 1]
    typeB,     // coefficients in [-1, 1]
};

struct ZonotopeSpec {
    VectorConfiguration generators;
    ZonotopeMode mode = ZonotopeMode::standard;
};

/// b(I) for independent sets I of one configuration. Entries that are not
/// stored are zero.
class BoxValuationTable {
public:
    void set(const IndexSet& s, Rational value);
    Rational at(const IndexSet& s) const;
    const std::map<IndexSet, Rational>& entries() const { return values_; }

    /// Throws MathError("DependentSet") if a key is not independent in `m`.
    void validate_against(const Matroid& m) const;

    /// phi of the half-open box spanned by I: the sum of b(J) over J inside I.
    Rational halfopen_box_value(const IndexSet& s) const;

    friend bool operator==(const BoxValuationTable&, const BoxValuationTable&) = default;

private:
    std::map<IndexSet, Rational> values_;
};

BoxValuationTable operator+(const BoxValuationTable& a, const BoxValuationTable& b);
BoxValuationTable operator*(const Rational& s, const BoxValuationTable& t);

/// Lattice points in the half-open box spanned by I (equals g(I)).
Integer box_halfopen_count(const Matroid& m, const IndexSet& independent);

/// b(I) = sum_{J inside I} (-1)^{|I \ J|} g(J) for every independent I.
BoxValuationTable default_box_table(const Matroid& m);

/// sum over independent I of phi(half-open box of I) n^|I|. A type-B spec is
/// the standard zonotope dilated by 2, so its polynomial is ehr(2n).
RatPolynomial ehrhart_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table);
RatPolynomial ehrhart_zonotope(const ZonotopeSpec& z);

/// n^j (1+n)^{d-j}: the unit cube with the j facets x_d = 1, ..., x_{d+1-j} = 1 removed.
IntPolynomial ehrhart_halfopen_cube(int d, int j);
/// A_{j+1}(d+1, t) as a degree-d h*-vector.
HStarVector hstar_halfopen_cube(int d, int j);

/// Half-open parallelepiped spanned by r independent vectors with the
/// facets in directions `removed` taken away. Table keys index `basis`.
HStarVector hstar_halfopen_parallelepiped(const VectorConfiguration& basis, const IndexSet& removed,
                                          const BoxValuationTable& table);
/// Twice that parallelepiped, up to a lattice translation.
HStarVector hstar_typeB_parallelepiped(const VectorConfiguration& basis, const IndexSet& removed,
                                       const BoxValuationTable& table);

/// Per-basis pieces of the matroid decomposition of a zonotope into
/// half-open parallelepipeds.
struct HStarBreakdown {
    std::vector<IndexSet> bases;
    std::vector<IndexSet> passive;  // passive[k] = IP(bases[k])
    /// multiplicities[m-1] = coefficient of A_m(d+1, t) (or B_m(d+1, t) for type B).
    std::vector<Rational> multiplicities;
    HStarVector hstar;
};

/// Sum over bases B of the half-open parallelepiped of B with the facets
/// IP(B) removed. Requires a full-dimensional configuration.
HStarBreakdown hstar_breakdown(const ZonotopeSpec& z, const BoxValuationTable& table);

HStarVector hstar_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table);
HStarVector hstar_zonotope(const ZonotopeSpec& z);
/// The same polynomial summed with independent sets on the outside:
/// sum_I b(I) sum_{B containing I} A_{|I u IP(B)|+1}(d+1, t).
HStarVector hstar_zonotope_by_independent_sets(const ZonotopeSpec& z, const BoxValuationTable& table);
/// sum_B A_{|IP(B)|+1}(d+1, t); every maximal minor must lie in {0, 1, -1}.
HStarVector hstar_totally_unimodular(const ZonotopeSpec& z);

HStarVector hstar_typeB_zonotope(const ZonotopeSpec& z, const BoxValuationTable& table);
HStarVector hstar_typeB_zonotope(const ZonotopeSpec& z);

/// Dispatches on the mode of `z`.
HStarVector hstar(const ZonotopeSpec& z, const BoxValuationTable& table);

/// c_1..c_{d+1} with h = sum_j c_j A_j(d+1, t), by an exact linear solve.
std::vector<Rational> express_in_A_basis(const HStarVector& h);
/// c_1 = 1 and c_j >= 0 for j >= 2.
bool is_in_zonotope_cone(const HStarVector& h);

/// Unit vectors e_1..e_d except v_k = e_1 + ... + e_{k-1} + (m+1) e_k,
/// 1 <= k <= d. Its h*-polynomial is A_1(d+1,t) + m A_{k+1}(d+1,t).
ZonotopeSpec pkm_parallelepiped(int d, int k, std::int64_t m);
/// Unit vectors except v_k = (m+1) e_k; h* = A_1(d+1,t) + m A_2(d+1,t).
ZonotopeSpec scaled_generator_parallelepiped(int d, int k, std::int64_t m);

/// Symmetry c_j = c_{d-j} of the coefficients of ehr in the basis n^j (1+n)^{d-j}.
bool is_reflexive_by_ehrhart(const RatPolynomial& ehr, int d);

}  // namespace zono
