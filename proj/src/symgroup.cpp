#include "igusa/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace igusa::combinat {

std::vector<PermutationData> sym_group_tools(int n) {
    if (n < 0 || n > 8) throw std::domain_error("sym_group_tools: n must be in [0, 8]");
    std::vector<PermutationData> out;
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        PermutationData d;
        d.perm = p;
        d.length = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++d.length;
        for (int i = 1; i < n; ++i)
            if (p[static_cast<size_t>(i - 1)] > p[static_cast<size_t>(i)]) d.descents.insert(i);
        out.push_back(std::move(d));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace igusa::combinat
