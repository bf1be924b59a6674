#include "igusa/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace igusa::combinat {

Partition::Partition(std::vector<std::int64_t> parts) : p_(std::move(parts)) {
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw std::domain_error("Partition: negative part");
        if (i > 0 && p_[i] > p_[i - 1]) throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_multiset(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

std::int64_t Partition::weight() const {
    std::int64_t w = 0;
    for (auto x : p_) w += x;
    return w;
}

Partition Partition::normalized() const {
    std::vector<std::int64_t> q = p_;
    while (!q.empty() && q.back() == 0) q.pop_back();
    return Partition(std::move(q));
}

Partition Partition::dual() const {
    std::vector<std::int64_t> d;
    if (!p_.empty()) {
        for (std::int64_t k = 1; k <= p_[0]; ++k) {
            std::int64_t cnt = 0;
            for (auto x : p_)
                if (x >= k) ++cnt;
            d.push_back(cnt);
        }
    }
    return Partition(std::move(d));
}

bool Partition::contains(const Partition& o) const {
    size_t n = std::max(p_.size(), o.p_.size());
    for (size_t i = 0; i < n; ++i)
        if (o.part(i) > part(i)) return false;
    return true;
}

Partition star(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> vals;
    vals.reserve(a.length() * b.length());
    for (auto x : a.parts())
        for (auto y : b.parts()) vals.push_back(std::min(x, y));
    return Partition::from_multiset(std::move(vals));
}

Partition star_power(const Partition& a, int b) {
    int n = static_cast<int>(a.length());
    if (b < 1 || b > n) throw std::domain_error("star_power: need 1 <= b <= number of parts");
    // Straightforward b-subset enumeration; n stays small in practice.
    std::vector<std::int64_t> vals;
    std::vector<int> comb(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
        std::int64_t mn = a.parts()[static_cast<size_t>(comb[0])];
        for (int i = 1; i < b; ++i) mn = std::min(mn, a.parts()[static_cast<size_t>(comb[static_cast<size_t>(i)])]);
        vals.push_back(mn);
        int i = b - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - b + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < b; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return Partition::from_multiset(std::move(vals));
}

std::vector<std::int64_t> tau_multiset(std::int64_t tau, int e, int f) {
    if (e < 1 || f < 1) throw std::domain_error("tau_multiset: e, f must be positive");
    if (tau < 0) throw std::domain_error("tau_multiset: tau must be nonnegative");
    std::int64_t g = tau / e;
    std::int64_t h = tau % e;
    std::vector<std::int64_t> out;
    out.reserve(static_cast<size_t>(e) * static_cast<size_t>(f));
    for (std::int64_t i = 0; i < h * f; ++i) out.push_back(g + 1);
    for (std::int64_t i = 0; i < (e - h) * f; ++i) out.push_back(g);
    return out;
}

}  // namespace igusa::combinat
