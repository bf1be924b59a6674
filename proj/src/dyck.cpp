#include "igusa/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace igusa::combinat {

DyckWord::DyckWord(std::vector<int> L, std::vector<int> M) : L_(std::move(L)), M_(std::move(M)) {
    if (L_.empty() || L_.size() != M_.size()) throw std::domain_error("DyckWord: bad run data");
    for (size_t j = 0; j < L_.size(); ++j) {
        int lprev = j ? L_[j - 1] : 0;
        int mprev = j ? M_[j - 1] : 0;
        if (L_[j] <= lprev || M_[j] <= mprev) throw std::domain_error("DyckWord: runs must be positive");
        if (M_[j] > L_[j]) throw std::domain_error("DyckWord: prefix has more ones than zeroes");
    }
    if (L_.back() != M_.back()) throw std::domain_error("DyckWord: unbalanced");
}

DyckWord DyckWord::from_string(const std::string& bits) {
    std::vector<int> L, M;
    int zeros = 0, ones = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        char b = bits[i];
        if (b == '0') {
            if (i > 0 && bits[i - 1] == '1') {
                L.push_back(zeros);
                M.push_back(ones);
            }
            ++zeros;
        } else if (b == '1') {
            ++ones;
        } else {
            throw std::domain_error("DyckWord: string must consist of 0s and 1s");
        }
    }
    L.push_back(zeros);
    M.push_back(ones);
    return DyckWord(std::move(L), std::move(M));
}

std::string DyckWord::to_string() const {
    std::string s;
    for (int j = 1; j <= runs(); ++j) {
        s.append(static_cast<size_t>(L(j) - L(j - 1)), '0');
        s.append(static_cast<size_t>(M(j) - M(j - 1)), '1');
    }
    return s;
}

namespace {
void gen(std::string& cur, int zeros, int ones, int c, std::vector<DyckWord>& out) {
    if (zeros == c && ones == c) {
        out.push_back(DyckWord::from_string(cur));
        return;
    }
    if (zeros < c) {
        cur.push_back('0');
        gen(cur, zeros + 1, ones, c, out);
        cur.pop_back();
    }
    if (ones < zeros) {
        cur.push_back('1');
        gen(cur, zeros, ones + 1, c, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<DyckWord> enum_dyck(int c) {
    if (c < 1) throw std::domain_error("enum_dyck: c must be positive");
    std::vector<DyckWord> out;
    std::string cur;
    gen(cur, 0, 0, c, out);
    return out;
}

std::optional<DyckWord> overlap_type(const Partition& lambda, const Partition& mu, int eps) {
    size_t cp = lambda.length();
    size_t c = mu.length();
    if (c != cp + static_cast<size_t>(eps))
        throw std::domain_error("overlap_type: mu must have eps more parts than lambda");
    // Padded dominance: mu_k <= lambda_{k-eps} for k > eps.
    for (size_t k = static_cast<size_t>(eps); k < c; ++k)
        if (mu.part(k) > lambda.part(k - static_cast<size_t>(eps))) return std::nullopt;

    // Merge the padded lambda (eps leading parts above everything) with mu,
    // descending, taking lambda parts first on ties; zeros emitted as lambda
    // when >= the current mu head, matching the weak/strict pattern of the
    // interleaving chain.
    std::string bits(static_cast<size_t>(eps), '0');
    size_t i = 0, j = 0;
    while (i < cp || j < c) {
        if (i < cp && (j >= c || lambda.part(i) >= mu.part(j))) {
            bits.push_back('0');
            ++i;
        } else {
            bits.push_back('1');
            ++j;
        }
    }
    return DyckWord::from_string(bits);
}

}  // namespace igusa::combinat
