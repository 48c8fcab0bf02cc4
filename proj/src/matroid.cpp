#include "zono/matroid.hpp"

#include <algorithm>
#include <string>

#include "zono/error.hpp"

namespace zono {

IndexSet::IndexSet(std::vector<std::size_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
        throw MathError("InvalidIndexSet", "index set has repeated elements");
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) v.push_back(i);
    return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t i) const { return std::binary_search(items_.begin(), items_.end(), i); }

std::uint64_t IndexSet::mask() const {
    std::uint64_t m = 0;
    for (auto i : items_) {
        if (i >= 64) throw ResourceError("ResourceLimit", "index sets are limited to 64 elements");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> v;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return IndexSet(std::move(v));
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// ---------------------------------------------------------------------------

VectorConfiguration::VectorConfiguration(std::size_t dimension, std::vector<std::vector<std::int64_t>> vectors)
    : dim_(dimension), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
        if (v.size() != dim_)
            throw MathError("DimensionMismatch", "generator of length " + std::to_string(v.size()) +
                                                     " in a configuration of dimension " + std::to_string(dim_));
}

IntMatrix VectorConfiguration::columns(const IndexSet& s) const {
    IntMatrix m(dim_, s.size());
    std::size_t c = 0;
    for (auto i : s) {
        if (i >= vectors_.size()) throw MathError("IndexOutOfRange", "element index out of range");
        for (std::size_t r = 0; r < dim_; ++r) m(r, c) = vectors_[i][r];
        ++c;
    }
    return m;
}

VectorConfiguration VectorConfiguration::restricted(const IndexSet& s) const {
    std::vector<std::vector<std::int64_t>> v;
    for (auto i : s) {
        if (i >= vectors_.size()) throw MathError("IndexOutOfRange", "element index out of range");
        v.push_back(vectors_[i]);
    }
    return VectorConfiguration(dim_, std::move(v));
}

// ---------------------------------------------------------------------------

namespace {

// Calls f on every k-subset of {0..n-1} as a sorted index vector.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Matroid::Matroid(VectorConfiguration config, ElementOrder order) : config_(std::move(config)), order_(order) {
    const std::size_t n = config_.size();
    if (n > kMaxElements)
        throw ResourceError("ResourceLimit", "configurations are limited to " + std::to_string(kMaxElements) +
                                                 " vectors, got " + std::to_string(n));
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    rank_ = zono::rank(config_.columns(IndexSet(all)));
    for_each_combination(n, static_cast<std::size_t>(rank_), [&](const std::vector<std::size_t>& idx) {
        IndexSet s(idx);
        if (zono::rank(config_.columns(s)) == rank_) {
            basis_masks_.insert(s.mask());
            bases_.push_back(std::move(s));
        }
    });
    std::sort(bases_.begin(), bases_.end(), [this](const IndexSet& a, const IndexSet& b) { return lex_less(a, b); });
}

int Matroid::rank(const IndexSet& s) const { return zono::rank(config_.columns(s)); }

bool Matroid::is_independent(const IndexSet& s) const { return rank(s) == static_cast<int>(s.size()); }

bool Matroid::is_basis(const IndexSet& s) const {
    return s.size() == static_cast<std::size_t>(rank_) && basis_masks_.count(s.mask()) != 0;
}

bool Matroid::precedes(std::size_t i, std::size_t j) const {
    return order_ == ElementOrder::natural ? i < j : i > j;
}

bool Matroid::lex_less(const IndexSet& a, const IndexSet& b) const {
    std::vector<std::size_t> x = a.items(), y = b.items();
    if (order_ == ElementOrder::reversed) {
        std::reverse(x.begin(), x.end());
        std::reverse(y.begin(), y.end());
    }
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [this](std::size_t i, std::size_t j) { return precedes(i, j); });
}

std::vector<IndexSet> Matroid::independent_sets() const {
    std::vector<IndexSet> out;
    std::vector<std::size_t> current;
    // Depth-first over the subset lattice; supersets of dependent sets are skipped.
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        out.emplace_back(current);
        for (std::size_t e = next; e < size(); ++e) {
            current.push_back(e);
            if (is_independent(IndexSet(current))) self(self, e + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), [this](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    });
    return out;
}

void Matroid::require_independent(const IndexSet& s) const {
    if (!is_independent(s)) throw MathError("DependentSet", "the index set is linearly dependent");
}

Integer Matroid::g(const IndexSet& independent) const {
    require_independent(independent);
    if (independent.empty()) return 1;
    const IntMatrix cols = config_.columns(independent);
    const std::size_t k = independent.size();
    Integer acc = 0;
    for_each_combination(dimension(), k, [&](const std::vector<std::size_t>& rows) {
        IntMatrix minor(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) minor(r, c) = cols(rows[r], c);
        acc = gcd(acc, abs(determinant(std::move(minor))));
    });
    return acc;
}

IndexSet Matroid::internally_passive(const IndexSet& basis) const {
    if (!is_basis(basis)) throw MathError("NotABasis", "the index set is not a basis");
    std::vector<std::size_t> passive;
    for (auto i : basis) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (basis.contains(j) || !precedes(j, i)) continue;
            std::vector<std::size_t> swapped;
            for (auto b : basis)
                if (b != i) swapped.push_back(b);
            swapped.push_back(j);
            if (is_basis(IndexSet(std::move(swapped)))) {
                passive.push_back(i);
                break;
            }
        }
    }
    return IndexSet(std::move(passive));
}

IndexSet Matroid::min_basis_containing(const IndexSet& independent) const {
    require_independent(independent);
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < size(); ++i) order[i] = i;
    if (order_ == ElementOrder::reversed) std::reverse(order.begin(), order.end());
    std::vector<std::size_t> current = independent.items();
    for (auto e : order) {
        if (current.size() == static_cast<std::size_t>(rank_)) break;
        if (independent.contains(e)) continue;
        current.push_back(e);
        if (!is_independent(IndexSet(current))) current.pop_back();
    }
    return IndexSet(std::move(current));
}

bool Matroid::is_coloop_free() const {
    for (std::size_t i = 0; i < size(); ++i) {
        bool in_every = std::all_of(bases_.begin(), bases_.end(), [i](const IndexSet& b) { return b.contains(i); });
        if (in_every) return false;
    }
    return true;
}

}  // namespace zono
