#include "shelf/partition.hpp"

#include "shelf/errors.hpp"

#include <numeric>

namespace shelf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Int syt_count(const Partition& lambda) {
    const auto& p = lambda.parts();
    if (p.empty()) return 1;
    std::vector<int> conj(static_cast<size_t>(p[0]), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
    Int hooks = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks *= (p[i] - j) + (conj[static_cast<size_t>(j)] - static_cast<int>(i)) - 1;
    Int q, r;
    Int nf = factorial_int(static_cast<unsigned long>(lambda.size()));
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), nf.get_mpz_t(), hooks.get_mpz_t());
    if (r != 0) throw Error("syt_count: hook product does not divide n!");
    return q;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InputError("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, mx); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace shelf
