#pragma once

// Exact univariate polynomials, h*-vectors, Ehrhart/h* basis changes and the
// coefficient-shape predicates (unimodal, palindromic, alternatingly
// increasing, real-rooted).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zono/error.hpp"
#include "zono/numeric.hpp"

namespace zono {

/// Dense univariate polynomial; coeffs()[i] is the coefficient of t^i.
/// Always normalized: no trailing zeros, the zero polynomial is empty.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
    static Polynomial monomial(std::size_t k, T c = T(1)) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    const T& leading() const { return coeffs_.back(); }

    /// Coefficients padded (or checked) to exactly `length` entries.
    std::vector<T> padded(std::size_t length) const {
        if (coeffs_.size() > length)
            throw MathError("DegreeTooLarge", "polynomial does not fit the requested length");
        std::vector<T> v = coeffs_;
        v.resize(length, T(0));
        return v;
    }

    template <class U>
    U operator()(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * T(static_cast<long long>(i));
        return Polynomial(std::move(v));
    }

    /// Multiply by t^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// t^n p(1/t); requires n >= degree().
    Polynomial reversed(int n) const {
        if (n < degree()) throw MathError("DegreeTooLarge", "reversal degree below polynomial degree");
        auto v = padded(static_cast<std::size_t>(n) + 1);
        std::reverse(v.begin(), v.end());
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Throws MathError("NonIntegral") if some coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& p);

/// Quotient and remainder of exact division over the rationals.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Coefficient vector (h_0, ..., h_d) together with its ambient degree d.
/// Entries are rational so that h*-vectors of rational-valued valuations are
/// representable; for lattice-point counts they are integers.
class HStarVector {
public:
    HStarVector(std::vector<Rational> h, int degree);
    static HStarVector from_integers(std::vector<Integer> h, int degree);
    /// Pads the polynomial with zeros up to `degree`.
    static HStarVector from_polynomial(const RatPolynomial& p, int degree);
    static HStarVector from_polynomial(const IntPolynomial& p, int degree);

    int degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return h_; }
    const Rational& operator[](std::size_t i) const { return h_[i]; }
    std::size_t size() const { return h_.size(); }

    bool is_integral() const;
    RatPolynomial polynomial() const { return RatPolynomial(h_); }

    friend bool operator==(const HStarVector&, const HStarVector&) = default;

private:
    std::vector<Rational> h_;
    int degree_;
};

// ---------------------------------------------------------------------------
// Ehrhart polynomial <-> h*-vector

/// h*-vector of an Ehrhart-type polynomial `ehr` of degree <= r, i.e. the
/// unique h with sum_i h_i C(n+r-i, r) = ehr(n).
HStarVector hstar_from_ehrhart(const RatPolynomial& ehr, int r);
HStarVector hstar_from_ehrhart(const IntPolynomial& ehr, int r);
/// Same transform without the integrality check, for rational valuations.
HStarVector hstar_from_ehrhart_rational(const RatPolynomial& ehr, int r);

RatPolynomial ehrhart_from_hstar(const HStarVector& h);

/// Coefficients c_0..c_d with p(n) = sum_j c_j n^j (1+n)^(d-j).
std::vector<Rational> express_in_shifted_power_basis(const RatPolynomial& p, int d);

// ---------------------------------------------------------------------------
// Shape predicates

/// True iff every complex root is real. Throws MathError for p == 0.
bool is_real_rooted(const RatPolynomial& p);
bool is_real_rooted(const IntPolynomial& p);

/// Number of distinct real roots of p, by a Sturm sequence over (-inf, inf).
int count_distinct_real_roots(const RatPolynomial& p);

struct UnimodalVerdict {
    bool unimodal = false;
    /// All indices attaining the maximum (empty when not unimodal).
    std::vector<std::size_t> peaks;
    /// When not unimodal: an index i with h_{i-1} > h_i < h_{i+k} (a valley).
    std::optional<std::size_t> valley;
};

UnimodalVerdict is_unimodal(std::span<const Rational> h);
UnimodalVerdict is_unimodal(const HStarVector& h);

/// h_0 <= ... <= h_k >= ... >= h_d.
bool has_peak_at(std::span<const Rational> h, std::size_t k);

/// The peak location claimed for zonotopes: d/2 for even d, and rising up to
/// (d-1)/2 and falling from (d+1)/2 for odd d.
bool has_central_peak(const HStarVector& h);

bool is_palindromic(const HStarVector& h);

/// h_0 <= h_d <= h_1 <= h_{d-1} <= ... <= h_{floor((d+1)/2)}.
bool is_alternatingly_increasing(const HStarVector& h);
bool is_alternatingly_increasing(std::span<const Rational> h);

/// The first violated link (i, j) of the alternating chain, i.e. h_i > h_j
/// where h_i directly precedes h_j in the chain.
std::optional<std::pair<std::size_t, std::size_t>> alternating_violation(std::span<const Rational> h);

struct SymmetricDecomposition {
    std::vector<Rational> a;  // length d+1, a_i = a_{d-i}
    std::vector<Rational> b;  // length d,   b_i = b_{d-1-i}
};

/// The unique h(t) = a(t) + t b(t) with a, b palindromic about d/2, (d-1)/2.
SymmetricDecomposition symmetric_decomposition(const HStarVector& h);

}  // namespace zono
