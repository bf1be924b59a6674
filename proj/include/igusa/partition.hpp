// Integer partitions with explicit trailing zeros: the declared number of
// parts matters for the * operation and for elementary divisor types, so a
// Partition keeps its length and zeros are only stripped where the underlying
// notion treats partitions up to padding (dual, overlap types).

#pragma once

#include <cstdint>
#include <vector>

namespace igusa::combinat {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    static Partition from_multiset(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& parts() const { return p_; }
    size_t length() const { return p_.size(); }
    std::int64_t part(size_t i) const { return i < p_.size() ? p_[i] : 0; }  // 0-based
    std::int64_t weight() const;
    bool operator==(const Partition& o) const { return p_ == o.p_; }

    // Trailing zeros removed; the partition "up to padding".
    Partition normalized() const;

    // Dual partition: dual_k = #{i : p_i >= k}; defined up to padding.
    Partition dual() const;

    // Componentwise dominance for equal lengths (after zero-padding the
    // shorter operand): o_i <= p_i for all i.
    bool contains(const Partition& o) const;

private:
    std::vector<std::int64_t> p_;
};

// The * operation: all pairwise minima, sorted; length(a) * length(b) parts.
Partition star(const Partition& a, const Partition& b);

// Minima over b-element subsets of the parts; C(length, b) parts.
Partition star_power(const Partition& a, int b);

// {tau}_{e,f}: writes tau = g e + h, h in [e-1]_0, and returns g+1 with
// multiplicity h*f together with g with multiplicity (e-h)*f.
std::vector<std::int64_t> tau_multiset(std::int64_t tau, int e, int f);

}  // namespace igusa::combinat
