#include "lefschetz/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

MultiIndex::MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1) throw std::invalid_argument("MultiIndex: indices start at 1");
        if (i > 0 && idx_[i] <= idx_[i - 1])
            throw std::invalid_argument("MultiIndex: indices must be strictly increasing");
    }
}

std::optional<std::pair<MultiIndex, int>> MultiIndex::from_unsorted(std::vector<int> indices) {
    // Insertion sort, counting inversions for the sign.
    int sign = 1;
    for (size_t i = 1; i < indices.size(); ++i) {
        int v = indices[i];
        size_t j = i;
        while (j > 0 && indices[j - 1] > v) {
            indices[j] = indices[j - 1];
            --j;
            sign = -sign;
        }
        indices[j] = v;
    }
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] == indices[i - 1]) return std::nullopt;
    return std::make_pair(MultiIndex(std::move(indices)), sign);
}

bool MultiIndex::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

std::pair<MultiIndex, int> MultiIndex::wedge(const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> merged;
    merged.reserve(a.idx_.size() + b.idx_.size());
    // Merge; each element of b jumps over the a-elements still to its right.
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.idx_.size() && j < b.idx_.size()) {
        if (a.idx_[i] < b.idx_[j]) {
            merged.push_back(a.idx_[i++]);
        } else if (a.idx_[i] > b.idx_[j]) {
            inversions += static_cast<long>(a.idx_.size() - i);
            merged.push_back(b.idx_[j++]);
        } else {
            return {MultiIndex{}, 0};
        }
    }
    while (i < a.idx_.size()) merged.push_back(a.idx_[i++]);
    while (j < b.idx_.size()) merged.push_back(b.idx_[j++]);
    return {MultiIndex(std::move(merged)), (inversions % 2 == 0) ? 1 : -1};
}

MultiIndex MultiIndex::complement(int dim) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(dim) - idx_.size());
    size_t p = 0;
    for (int v = 1; v <= dim; ++v) {
        if (p < idx_.size() && idx_[p] == v) {
            ++p;
        } else {
            out.push_back(v);
        }
    }
    if (p != idx_.size()) throw std::invalid_argument("MultiIndex: index above ambient dimension");
    return MultiIndex(std::move(out));
}

std::vector<MultiIndex> multi_index_basis(int n, int k) {
    std::vector<MultiIndex> out;
    const int dim = 2 * n;
    if (k < 0 || k > dim) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == dim - (k - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

int basis_position(const std::vector<MultiIndex>& basis, const MultiIndex& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis.begin());
}

long exterior_dim(int n, int k) {
    const int dim = 2 * n;
    if (k < 0 || k > dim) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (dim - i) / (i + 1);
    return r;
}

}  // namespace lefschetz
