#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace igusa::combinat {

struct PermutationData {
    std::vector<int> perm;   // one-line notation, 0-based values
    int length;              // Coxeter length = inversion count
    std::set<int> descents;  // right descent set, 1-based positions in [n-1]
};

// Full enumeration of S_n with lengths and descent sets; n <= 8.
std::vector<PermutationData> sym_group_tools(int n);

}  // namespace igusa::combinat
