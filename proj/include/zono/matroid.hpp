#pragma once

// Linear matroid of an ordered integer vector configuration: independence,
// bases in lexicographic order, gcd of maximal minors, internally passive
// elements and minimal basis completion.
//
// Indices are 0-based throughout the library; the command-line tool converts
// to the 1-based convention of its files.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <unordered_set>
#include <vector>

#include "zono/linalg.hpp"
#include "zono/numeric.hpp"

namespace zono {

/// Sorted set of distinct element indices.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> items) : IndexSet(std::vector<std::size_t>(items)) {}
    explicit IndexSet(std::vector<std::size_t> items);
    static IndexSet from_mask(std::uint64_t mask);

    const std::vector<std::size_t>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains(std::size_t i) const;
    std::uint64_t mask() const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.items_ <=> b.items_; }

private:
    std::vector<std::size_t> items_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);

/// Ordered list of integer vectors of a common ambient dimension. Zero
/// vectors (loops) and repeated vectors (parallel elements) are allowed.
class VectorConfiguration {
public:
    VectorConfiguration(std::size_t dimension, std::vector<std::vector<std::int64_t>> vectors);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<std::int64_t>& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<std::vector<std::int64_t>>& vectors() const { return vectors_; }

    /// d x |S| matrix with the selected vectors as columns.
    IntMatrix columns(const IndexSet& s) const;
    /// Configuration of the selected vectors, in the order of `s`.
    VectorConfiguration restricted(const IndexSet& s) const;

private:
    std::size_t dim_;
    std::vector<std::vector<std::int64_t>> vectors_;
};

/// Which element order the matroid uses: the input order, or its reverse.
enum class ElementOrder { natural, reversed };

class Matroid {
public:
    static constexpr std::size_t kMaxElements = 24;

    explicit Matroid(VectorConfiguration config, ElementOrder order = ElementOrder::natural);

    const VectorConfiguration& config() const { return config_; }
    ElementOrder order() const { return order_; }
    std::size_t size() const { return config_.size(); }
    std::size_t dimension() const { return config_.dimension(); }

    /// Rank of the whole ground set.
    int rank() const { return rank_; }
    int rank(const IndexSet& s) const;
    bool is_independent(const IndexSet& s) const;
    bool is_basis(const IndexSet& s) const;

    /// True iff i precedes j in the element order.
    bool precedes(std::size_t i, std::size_t j) const;
    /// Lexicographic comparison of sets listed in the element order.
    bool lex_less(const IndexSet& a, const IndexSet& b) const;

    /// All independent sets including the empty set, by size then lex order.
    std::vector<IndexSet> independent_sets() const;
    /// All bases, lexicographically ascending in the element order.
    const std::vector<IndexSet>& bases() const { return bases_; }

    /// gcd of all maximal minors of the columns in I; g(empty) = 1.
    Integer g(const IndexSet& independent) const;

    /// Elements i of B for which some j outside B preceding i makes
    /// B - i + j a basis.
    IndexSet internally_passive(const IndexSet& basis) const;

    /// Lexicographically least basis containing I.
    IndexSet min_basis_containing(const IndexSet& independent) const;

    /// No element lies in every basis.
    bool is_coloop_free() const;

private:
    void require_independent(const IndexSet& s) const;

    VectorConfiguration config_;
    ElementOrder order_;
    int rank_ = 0;
    std::vector<IndexSet> bases_;
    std::unordered_set<std::uint64_t> basis_masks_;
};

}  // namespace zono
