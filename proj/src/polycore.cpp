#include <cstdlib>

#include "zono/polynomial.hpp"

namespace zono {

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
    return RatPolynomial(std::move(v));
}

IntPolynomial to_integer(const RatPolynomial& p) {
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(to_integer(c));
    return IntPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw MathError("DivisionByZero", "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPolynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational f = rem[k] / b.leading();
        quot[k - db] = f;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs()[i];
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

namespace {

RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

// Positive rescaling keeps every sign and keeps Sturm chains small.
RatPolynomial unit_leading(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / abs(p.leading()));
}

}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

// ---------------------------------------------------------------------------

HStarVector::HStarVector(std::vector<Rational> h, int degree) : h_(std::move(h)), degree_(degree) {
    if (degree < 0) throw MathError("InvalidArgument", "h*-vector degree must be nonnegative");
    if (h_.size() != static_cast<std::size_t>(degree) + 1)
        throw MathError("InvalidArgument", "h*-vector must have degree+1 entries");
}

HStarVector HStarVector::from_integers(std::vector<Integer> h, int degree) {
    std::vector<Rational> v(h.begin(), h.end());
    return HStarVector(std::move(v), degree);
}

HStarVector HStarVector::from_polynomial(const RatPolynomial& p, int degree) {
    if (degree < 0) throw MathError("InvalidArgument", "h*-vector degree must be nonnegative");
    return HStarVector(p.padded(static_cast<std::size_t>(degree) + 1), degree);
}

HStarVector HStarVector::from_polynomial(const IntPolynomial& p, int degree) {
    return from_polynomial(to_rational(p), degree);
}

bool HStarVector::is_integral() const {
    return std::all_of(h_.begin(), h_.end(), [](const Rational& q) { return zono::is_integral(q); });
}

// ---------------------------------------------------------------------------

HStarVector hstar_from_ehrhart_rational(const RatPolynomial& ehr, int r) {
    if (r < 0) throw MathError("InvalidArgument", "degree must be nonnegative");
    if (ehr.degree() > r)
        throw MathError("DegreeTooLarge", "Ehrhart polynomial has degree above the declared dimension");
    std::vector<Rational> values(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) values[i] = ehr(Rational(i));
    std::vector<Rational> h(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) {
            Rational term = Rational(binomial(r + 1, k - i)) * values[i];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h[k] = acc;
    }
    return HStarVector(std::move(h), r);
}

HStarVector hstar_from_ehrhart(const RatPolynomial& ehr, int r) {
    auto h = hstar_from_ehrhart_rational(ehr, r);
    if (!h.is_integral())
        throw MathError("NotIntegerValued",
                        "h*-vector has non-integer entries; the polynomial is not integer-valued");
    return h;
}

HStarVector hstar_from_ehrhart(const IntPolynomial& ehr, int r) {
    return hstar_from_ehrhart(to_rational(ehr), r);
}

RatPolynomial ehrhart_from_hstar(const HStarVector& h) {
    const int r = h.degree();
    const Rational inv_fact = Rational(1) / Rational(factorial(r));
    RatPolynomial result;
    for (int i = 0; i <= r; ++i) {
        if (h[i] == 0) continue;
        // C(n + r - i, r) = prod_{m=1..r} (n - i + m) / r!
        RatPolynomial term = RatPolynomial::constant(inv_fact * h[i]);
        for (int m = 1; m <= r; ++m) term = term * RatPolynomial{Rational(m - i), Rational(1)};
        result += term;
    }
    return result;
}

std::vector<Rational> express_in_shifted_power_basis(const RatPolynomial& p, int d) {
    if (d < 0) throw MathError("InvalidArgument", "degree must be nonnegative");
    if (p.degree() > d) throw MathError("DegreeTooLarge", "polynomial degree exceeds basis degree");
    // n^j (1+n)^(d-j) has lowest term n^j with coefficient 1: peel off from below.
    std::vector<RatPolynomial> one_plus_n_pow(static_cast<std::size_t>(d) + 1);
    one_plus_n_pow[0] = RatPolynomial{Rational(1)};
    for (int k = 1; k <= d; ++k) one_plus_n_pow[k] = one_plus_n_pow[k - 1] * RatPolynomial{Rational(1), Rational(1)};

    RatPolynomial rest = p;
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        c[j] = rest.coeff(j);
        if (c[j] != 0) rest -= one_plus_n_pow[d - j].shifted(j) * c[j];
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int count_distinct_real_roots(const RatPolynomial& p) {
    if (p.is_zero()) throw MathError("ZeroPolynomial", "the zero polynomial has no finite root count");
    if (p.degree() <= 0) return 0;
    std::vector<RatPolynomial> chain{unit_leading(p), unit_leading(p.derivative())};
    while (true) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(unit_leading(-r));
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& s : chain) {
        at_pos.push_back(sign(s.leading()));
        at_neg.push_back(s.degree() % 2 == 0 ? sign(s.leading()) : -sign(s.leading()));
    }
    return variations(at_neg) - variations(at_pos);
}

bool is_real_rooted(const RatPolynomial& p) {
    if (p.is_zero()) throw MathError("ZeroPolynomial", "real-rootedness is undefined for the zero polynomial");
    if (p.degree() <= 0) return true;
    RatPolynomial g = gcd(p, p.derivative());
    RatPolynomial squarefree = divmod(p, g).first;
    if (count_distinct_real_roots(squarefree) != squarefree.degree()) return false;
    return is_real_rooted(g);
}

bool is_real_rooted(const IntPolynomial& p) { return is_real_rooted(to_rational(p)); }

UnimodalVerdict is_unimodal(std::span<const Rational> h) {
    if (h.empty()) throw MathError("EmptyVector", "unimodality of an empty sequence is undefined");
    UnimodalVerdict v;
    std::size_t i = 1;
    while (i < h.size() && h[i - 1] <= h[i]) ++i;
    while (i < h.size() && h[i - 1] >= h[i]) ++i;
    if (i < h.size()) {
        v.valley = i - 1;
        return v;
    }
    v.unimodal = true;
    const Rational& top = *std::max_element(h.begin(), h.end());
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] == top) v.peaks.push_back(k);
    return v;
}

UnimodalVerdict is_unimodal(const HStarVector& h) { return is_unimodal(std::span<const Rational>(h.coefficients())); }

bool has_peak_at(std::span<const Rational> h, std::size_t k) {
    if (k >= h.size()) return false;
    for (std::size_t i = 1; i <= k; ++i)
        if (h[i - 1] > h[i]) return false;
    for (std::size_t i = k + 1; i < h.size(); ++i)
        if (h[i - 1] < h[i]) return false;
    return true;
}

bool has_central_peak(const HStarVector& h) {
    std::span<const Rational> s(h.coefficients());
    const auto d = static_cast<std::size_t>(h.degree());
    if (d % 2 == 0) return has_peak_at(s, d / 2);
    const std::size_t m = (d - 1) / 2;
    for (std::size_t i = 1; i <= m; ++i)
        if (s[i - 1] > s[i]) return false;
    for (std::size_t i = m + 2; i <= d; ++i)
        if (s[i - 1] < s[i]) return false;
    return true;
}

bool is_palindromic(const HStarVector& h) {
    const auto d = static_cast<std::size_t>(h.degree());
    for (std::size_t i = 0; i <= d; ++i)
        if (h[i] != h[d - i]) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> alternating_violation(std::span<const Rational> h) {
    if (h.empty()) throw MathError("EmptyVector", "empty coefficient vector");
    std::vector<std::size_t> chain;
    std::size_t lo = 0, hi = h.size() - 1;
    while (lo <= hi) {
        chain.push_back(lo);
        if (lo != hi) chain.push_back(hi);
        ++lo;
        if (hi == 0) break;
        --hi;
    }
    for (std::size_t k = 1; k < chain.size(); ++k)
        if (h[chain[k - 1]] > h[chain[k]]) return std::make_pair(chain[k - 1], chain[k]);
    return std::nullopt;
}

bool is_alternatingly_increasing(std::span<const Rational> h) { return !alternating_violation(h).has_value(); }

bool is_alternatingly_increasing(const HStarVector& h) {
    return is_alternatingly_increasing(std::span<const Rational>(h.coefficients()));
}

SymmetricDecomposition symmetric_decomposition(const HStarVector& h) {
    const int d = h.degree();
    auto at = [&](int i) { return (i >= 0 && i <= d) ? h[i] : Rational(0); };
    SymmetricDecomposition out;
    out.a.resize(static_cast<std::size_t>(d) + 1);
    out.b.resize(static_cast<std::size_t>(d));
    // h_i - h_{d+1-i} = a_i - a_{i-1}
    Rational running = 0;
    for (int i = 0; i <= d; ++i) {
        running += at(i) - at(d + 1 - i);
        out.a[i] = running;
    }
    for (int i = 0; i < d; ++i) out.b[i] = at(i + 1) - out.a[i + 1];
    return out;
}

}  // namespace zono
