// The chain-product poset C_nbar of subwords of a_1^{n_1} ... a_m^{n_m} and
// its chain complex (flags of nonempty subwords).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace igusa::combinat {

using Composition = std::vector<int>;  // (n_1, ..., n_m), entries >= 0

inline int composition_sum(const Composition& n) {
    int s = 0;
    for (int x : n) s += x;
    return s;
}

// A subword a_1^{alpha_1} ... a_m^{alpha_m}; stored as the exponent tuple.
class Subword {
public:
    Subword() = default;
    explicit Subword(std::vector<int> alpha) : a_(std::move(alpha)) {}
    static Subword empty(size_t m) { return Subword(std::vector<int>(m, 0)); }

    size_t m() const { return a_.size(); }
    int alpha(size_t i) const { return a_.at(i); }
    const std::vector<int>& exponents() const { return a_; }
    bool is_empty() const;
    int degree() const;

    bool operator==(const Subword& o) const { return a_ == o.a_; }
    bool operator<=(const Subword& o) const;  // componentwise
    bool strictly_less(const Subword& o) const { return *this <= o && !(*this == o); }
    // Lexicographic order on exponent tuples; used for deterministic output.
    bool operator<(const Subword& o) const { return a_ < o.a_; }

    Subword operator*(const Subword& o) const;
    Subword quotient(const Subword& o) const;  // this / o, requires o <= this

    std::string name() const;  // e.g. "a1^2.a2"

private:
    std::vector<int> a_;
};

// All subwords of the full word of `n`, optionally skipping the empty word,
// in lexicographic order.
std::vector<Subword> all_subwords(const Composition& n, bool include_empty);

using Flag = std::vector<Subword>;  // strict chain, possibly empty

// Enumerates every flag of nonempty subwords (the chain complex WO_nbar),
// including the empty flag, invoking f on each.
void for_each_flag(const Composition& n, const std::function<void(const Flag&)>& f);

}  // namespace igusa::combinat
