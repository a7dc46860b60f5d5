#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace lefschetz {

/// Basis label for a degree-k monomial: a strictly increasing tuple of
/// coordinate indices in {1,..,2n}. Coordinate i in {1..n} is x_i and
/// coordinate n+i is y_i. Ordering is lexicographic, which makes sparse
/// term maps iterate in a canonical order.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> indices);
    MultiIndex(std::initializer_list<int> indices)
        : MultiIndex(std::vector<int>(indices)) {}

    /// Canonicalizes an arbitrary index tuple. Returns the sorted label and
    /// the sign of the sorting permutation, or nullopt on a repeated index.
    static std::optional<std::pair<MultiIndex, int>> from_unsorted(std::vector<int> indices);

    int degree() const { return static_cast<int>(idx_.size()); }
    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }
    bool contains(int i) const;
    const std::vector<int>& indices() const { return idx_; }

    /// Concatenation resolved to canonical order: {merged, sign} with
    /// sign = parity of the merge, or {empty, 0} when the labels overlap.
    static std::pair<MultiIndex, int> wedge(const MultiIndex& a, const MultiIndex& b);

    /// Increasing complement within {1..dim}.
    MultiIndex complement(int dim) const;

    bool operator==(const MultiIndex&) const = default;
    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> idx_;
};

/// All C(2n,k) labels of degree k over {1..2n} in lexicographic order
/// (which is also the order of operator<). Empty for k < 0 or k > 2n.
std::vector<MultiIndex> multi_index_basis(int n, int k);

/// Position of m in the lexicographic basis, or -1.
int basis_position(const std::vector<MultiIndex>& basis, const MultiIndex& m);

/// C(2n,k), with out-of-range degrees giving 0.
long exterior_dim(int n, int k);

}  // namespace lefschetz
