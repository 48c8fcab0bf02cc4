#include "zono/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zono {

namespace {

void require(bool ok, const char* code, const std::string& message) {
    if (!ok) throw MathError(code, message);
}

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<Integer> v(counts.begin(), counts.end());
    return IntPolynomial(std::move(v));
}

int count_descents(const std::vector<int>& w) {
    int des = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) ++des;
    return des;
}

// Signed word w holds eps_i * sigma_i; position 0 carries the letter 0.
int count_signed_descents(const std::vector<int>& w) {
    int des = 0, prev = 0;
    for (int x : w) {
        if (prev > x) ++des;
        prev = x;
    }
    return des;
}

std::vector<int> iota_without(int d, int skip) {
    std::vector<int> v;
    for (int x = 1; x <= d; ++x)
        if (x != skip) v.push_back(x);
    return v;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        require(sorted[i] == static_cast<int>(i) + 1, "InvalidPermutation", "word is not a bijection of [d]");
}

SignedPermutation::SignedPermutation(Permutation word, std::vector<int> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    require(static_cast<int>(signs_.size()) == word_.size(), "InvalidPermutation", "sign vector length differs from word length");
    for (int s : signs_) require(s == 1 || s == -1, "InvalidPermutation", "signs must be +1 or -1");
}

std::vector<int> descent_set(const Permutation& sigma) {
    std::vector<int> out;
    for (int i = 1; i < sigma.size(); ++i)
        if (sigma.at(i) > sigma.at(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> j_descent_set(const Permutation& sigma, int j) {
    const int d = sigma.size();
    require(j >= 0 && j <= d, "IndexOutOfRange", "j must lie in 0..d");
    auto out = descent_set(sigma);
    if (d >= 1 && sigma.at(d) >= d + 1 - j && j > 0) out.push_back(d);
    return out;
}

std::vector<int> signed_descent_set(const SignedPermutation& pi) {
    std::vector<int> out;
    for (int i = 0; i < pi.size(); ++i)
        if (pi.signed_at(i) > pi.signed_at(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> l_descent_set_B(const SignedPermutation& pi, int l) {
    const int d = pi.size();
    require(l >= 0 && l <= d, "IndexOutOfRange", "l must lie in 0..d");
    auto out = signed_descent_set(pi);
    if (l > 0 && d >= 1 && pi.signed_at(d) >= d + 1 - l) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------

IntPolynomial a_j_polynomial_enumerate(int d, int j) {
    require(d >= 1 && j >= 1 && j <= d, "IndexOutOfRange", "need 1 <= j <= d");
    if (d > kMaxEnumerateA)
        throw ResourceError("ResourceLimit", "enumeration of S_" + std::to_string(d) + " exceeds the cap d <= " +
                                                 std::to_string(kMaxEnumerateA));
    const int last = d + 1 - j;
    std::vector<int> rest = iota_without(d, last);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
    std::vector<int> word(static_cast<std::size_t>(d));
    do {
        std::copy(rest.begin(), rest.end(), word.begin());
        word.back() = last;
        ++counts[count_descents(word)];
    } while (std::next_permutation(rest.begin(), rest.end()));
    return from_counts(counts);
}

std::vector<IntPolynomial> a_polynomials(int d) {
    require(d >= 1, "IndexOutOfRange", "need d >= 1");
    std::vector<IntPolynomial> row{IntPolynomial{Integer(1)}};
    for (int m = 1; m < d; ++m) {
        // A_j(m+1) = t * sum_{l<j} A_l(m) + sum_{l>=j} A_l(m)
        std::vector<IntPolynomial> next(static_cast<std::size_t>(m) + 1);
        IntPolynomial below;
        IntPolynomial above;
        for (const auto& p : row) above += p;
        for (int j = 1; j <= m + 1; ++j) {
            next[j - 1] = below.shifted(1) + above;
            if (j <= m) {
                below += row[j - 1];
                above -= row[j - 1];
            }
        }
        row = std::move(next);
    }
    return row;
}

IntPolynomial a_j_polynomial(int d, int j) {
    require(d >= 1 && j >= 1 && j <= d, "IndexOutOfRange", "need 1 <= j <= d");
    return a_polynomials(d)[j - 1];
}

IntPolynomial b_l_polynomial_enumerate(int d, int l) {
    require(d >= 1 && l >= 1 && l <= d, "IndexOutOfRange", "need 1 <= l <= d");
    if (d > kMaxEnumerateB)
        throw ResourceError("ResourceLimit", "enumeration of B_" + std::to_string(d) + " exceeds the cap d <= " +
                                                 std::to_string(kMaxEnumerateB));
    const int last = d + 1 - l;
    std::vector<int> rest = iota_without(d, last);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> word(static_cast<std::size_t>(d));
    const std::uint64_t masks = std::uint64_t{1} << (d - 1);
    do {
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            for (int i = 0; i < d - 1; ++i) word[i] = (mask >> i & 1) ? -rest[i] : rest[i];
            word.back() = last;
            ++counts[count_signed_descents(word)];
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return from_counts(counts);
}

IntPolynomial b_l_polynomial_via_A(int d, int l) {
    require(d >= 0 && l >= 0 && l <= d, "IndexOutOfRange", "need 0 <= l <= d");
    auto a = a_polynomials(d + 1);
    IntPolynomial sum;
    for (int j = 0; j <= d - l; ++j) sum += a[j + l] * binomial(d - l, j);
    return sum * (Integer(1) << l);
}

IntPolynomial eulerian_A(int d) {
    require(d >= 1, "IndexOutOfRange", "need d >= 1");
    return a_j_polynomial(d + 1, 1);
}

IntPolynomial eulerian_A_enumerate(int d) {
    require(d >= 1, "IndexOutOfRange", "need d >= 1");
    if (d > kMaxEnumerateA)
        throw ResourceError("ResourceLimit", "enumeration of S_" + std::to_string(d) + " exceeds the cap");
    std::vector<int> w(static_cast<std::size_t>(d));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
    do ++counts[count_descents(w)];
    while (std::next_permutation(w.begin(), w.end()));
    return from_counts(counts);
}

IntPolynomial l_descent_polynomial_B(int d, int l) {
    require(d >= 1 && l >= 0 && l <= d, "IndexOutOfRange", "need 0 <= l <= d");
    if (d > kMaxEnumerateB)
        throw ResourceError("ResourceLimit", "enumeration of B_" + std::to_string(d) + " exceeds the cap d <= " +
                                                 std::to_string(kMaxEnumerateB));
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> word(static_cast<std::size_t>(d));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 2, 0);
    const std::uint64_t masks = std::uint64_t{1} << d;
    do {
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            for (int i = 0; i < d; ++i) word[i] = (mask >> i & 1) ? -perm[i] : perm[i];
            int des = count_signed_descents(word);
            if (l > 0 && word.back() >= d + 1 - l) ++des;
            ++counts[des];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return from_counts(counts);
}

IntPolynomial eulerian_B(int d) {
    require(d >= 1, "IndexOutOfRange", "need d >= 1");
    return l_descent_polynomial_B(d, 0);
}

IntPolynomial j_descent_polynomial(int d, int j) {
    require(d >= 1 && j >= 0 && j <= d, "IndexOutOfRange", "need 0 <= j <= d");
    if (d > kMaxEnumerateA)
        throw ResourceError("ResourceLimit", "enumeration of S_" + std::to_string(d) + " exceeds the cap");
    std::vector<int> w(static_cast<std::size_t>(d));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d) + 1, 0);
    do {
        int des = count_descents(w);
        if (j > 0 && w.back() >= d + 1 - j) ++des;
        ++counts[des];
    } while (std::next_permutation(w.begin(), w.end()));
    return from_counts(counts);
}

}  // namespace zono
