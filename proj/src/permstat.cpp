#include "shelf/permstat.hpp"

#include "shelf/errors.hpp"

#include <algorithm>

namespace shelf {

int valleys(const Permutation& w) {
    const auto v = w.one_line();
    int c = 0;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i - 1] > v[i] && v[i] < v[i + 1]) ++c;
    return c;
}

int peaks(const Permutation& w) {
    const auto v = w.one_line();
    int c = 0;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i - 1] < v[i] && v[i] > v[i + 1]) ++c;
    return c;
}

DescentInfo descents(const Permutation& w) {
    const auto v = w.one_line();
    DescentInfo d;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) {
            ++d.count;
            d.positions.push_back(static_cast<int>(i + 1));
        }
    return d;
}

namespace {
// Rank under 1 < 2 < ... < n < -n < ... < -2 < -1.
inline int signed_rank(std::int32_t x, int n) {
    return x > 0 ? x : 2 * n + 1 + x;
}
} // namespace

int cyclic_descents(const SignedPermutation& w) {
    const int n = w.size();
    int c = 0;
    for (int i = 1; i < n; ++i)
        if (signed_rank(w(i), n) > signed_rank(w(i + 1), n)) ++c;
    if (w(n) < 0) ++c;
    if (w(1) > 0) ++c;
    return c;
}

std::vector<int> cycle_type(const Permutation& w) {
    const int n = w.size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> lengths;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        int len = 0;
        int c = s;
        while (!seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = true;
            c = w(c + 1) - 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

Partition rsk_shape(const Permutation& w) {
    std::vector<std::vector<std::int32_t>> rows;
    for (std::int32_t x : w.one_line()) {
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                x = -1; // placed
                break;
            }
            std::swap(x, *it);
        }
        if (x != -1) rows.push_back({x});
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

ValleyTable::ValleyTable(int n_max) : n_max_(n_max), zero_(0) {
    if (n_max < 1) throw InputError("ValleyTable: n_max must be >= 1");
    rows_.resize(static_cast<size_t>(n_max));
    rows_[0] = {Int(1)}; // v(1,0) = 1
    for (int n = 2; n <= n_max; ++n) {
        const auto& prev = rows_[static_cast<size_t>(n - 2)];
        auto getp = [&](int k) -> Int {
            return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[static_cast<size_t>(k)]
                                                                 : Int(0);
        };
        std::vector<Int> row(static_cast<size_t>(max_valleys(n)) + 1);
        for (int k = 0; k <= max_valleys(n); ++k)
            row[static_cast<size_t>(k)] = (2 * k + 2) * getp(k) + (n - 2 * k) * getp(k - 1);
        rows_[static_cast<size_t>(n - 1)] = std::move(row);
    }
}

const Int& ValleyTable::at(int n, int k) const {
    if (n < 1 || n > n_max_) throw InputError("ValleyTable::at: n out of range");
    const auto& row = rows_[static_cast<size_t>(n - 1)];
    if (k < 0 || k >= static_cast<int>(row.size())) return zero_;
    return row[static_cast<size_t>(k)];
}

} // namespace shelf
