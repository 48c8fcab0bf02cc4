#pragma once

// Descent statistics on permutations and signed permutations, and the
// refined Eulerian polynomials A_j(d,t) and B_l(d,t).
//
// Every family has two deliberately separate computation paths: brute-force
// enumeration and a recurrence/identity. Each is the other's oracle.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "zono/polynomial.hpp"

namespace zono {

/// One-line notation of a bijection of {1, ..., d}.
class Permutation {
public:
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    int size() const { return static_cast<int>(word_.size()); }
    /// 1-based access: at(1) is the first letter.
    int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

private:
    std::vector<int> word_;
};

/// A permutation word together with a sign for every letter. Position 0
/// (letter 0, sign +1) is implicit and never stored.
class SignedPermutation {
public:
    SignedPermutation(Permutation word, std::vector<int> signs);

    int size() const { return word_.size(); }
    /// The signed letter eps_i * sigma_i; signed_at(0) == 0.
    int signed_at(int i) const { return i == 0 ? 0 : signs_[static_cast<std::size_t>(i - 1)] * word_.at(i); }
    const Permutation& word() const { return word_; }
    const std::vector<int>& signs() const { return signs_; }

private:
    Permutation word_;
    std::vector<int> signs_;
};

/// Positions i in [d-1] with sigma_i > sigma_{i+1}.
std::vector<int> descent_set(const Permutation& sigma);
/// descent_set plus d when sigma_d >= d+1-j; 0 <= j <= d.
std::vector<int> j_descent_set(const Permutation& sigma, int j);

/// Positions i in {0, ..., d-1} with eps_i sigma_i > eps_{i+1} sigma_{i+1}.
std::vector<int> signed_descent_set(const SignedPermutation& pi);
/// signed_descent_set plus d when eps_d pi_d >= d+1-l; 0 <= l <= d.
std::vector<int> l_descent_set_B(const SignedPermutation& pi, int l);

inline constexpr int kMaxEnumerateA = 12;
inline constexpr int kMaxEnumerateB = 10;

/// A_j(d,t) by enumerating permutations with last letter d+1-j.
IntPolynomial a_j_polynomial_enumerate(int d, int j);
/// A_j(d,t) from A_1(1,t) = 1 by the last-letter recurrence.
IntPolynomial a_j_polynomial(int d, int j);
/// All of A_1(d,t), ..., A_d(d,t); entry k holds A_{k+1}.
std::vector<IntPolynomial> a_polynomials(int d);

/// B_l(d,t) by enumerating signed permutations with eps_d sigma_d = d+1-l.
IntPolynomial b_l_polynomial_enumerate(int d, int l);
/// B_{l+1}(d+1,t) = 2^l sum_j C(d-l, j) A_{j+l+1}(d+1,t), 0 <= l <= d.
IntPolynomial b_l_polynomial_via_A(int d, int l);

/// Eulerian polynomial of S_d, taken as A_1(d+1,t).
IntPolynomial eulerian_A(int d);
/// sum over S_d of t^des, by enumeration.
IntPolynomial eulerian_A_enumerate(int d);
/// sum over all signed permutations of [d] of t^des, by enumeration.
IntPolynomial eulerian_B(int d);

/// sum over S_d of t^{des_j}.
IntPolynomial j_descent_polynomial(int d, int j);
/// sum over B_d of t^{des_l}.
IntPolynomial l_descent_polynomial_B(int d, int l);

}  // namespace zono
