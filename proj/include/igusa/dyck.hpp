// Dyck words 0^{L_1} 1^{M_1} 0^{L_2-L_1} 1^{M_2-M_1} ... with L_r = M_r = c,
// and overlap types of pairs of partitions.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/partition.hpp"

namespace igusa::combinat {

class DyckWord {
public:
    // L and M strictly increasing, L.back() == M.back() == c, M_j <= L_j.
    DyckWord(std::vector<int> L, std::vector<int> M);
    static DyckWord from_string(const std::string& bits);

    int c() const { return L_.back(); }
    int runs() const { return static_cast<int>(L_.size()); }  // r
    // 1-based accessors with the conventions L_0 = M_0 = 0.
    int L(int j) const { return j == 0 ? 0 : L_.at(static_cast<size_t>(j - 1)); }
    int M(int j) const { return j == 0 ? 0 : M_.at(static_cast<size_t>(j - 1)); }

    std::string to_string() const;  // e.g. "00101101"
    bool operator==(const DyckWord& o) const { return L_ == o.L_ && M_ == o.M_; }
    bool operator<(const DyckWord& o) const { return to_string() < o.to_string(); }

private:
    std::vector<int> L_, M_;
};

// All Catalan(c) Dyck words of length 2c, in lexicographic order of the
// 0/1 string.
std::vector<DyckWord> enum_dyck(int c);

// Overlap type of (lambda, mu) with lambda of c' parts, mu of c parts and
// eps = c - c': the unique w in D_{2c} whose interleaving chain the padded
// partitions satisfy, or nullopt when mu is not dominated by the padded
// lambda.
std::optional<DyckWord> overlap_type(const Partition& lambda, const Partition& mu, int eps);

}  // namespace igusa::combinat
