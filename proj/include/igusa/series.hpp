#pragma once

#include <vector>

#include "igusa/polynomial.hpp"

namespace igusa::exactalg {

// Power series in one distinguished variable, truncated at degree `cutoff`.
// coefficient(k) is exact and does not involve the distinguished variable.
class TruncatedSeries {
public:
    TruncatedSeries(VarId v, std::int64_t cutoff)
        : var_(v), c_(static_cast<size_t>(cutoff) + 1) {}

    VarId variable() const { return var_; }
    std::int64_t cutoff() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const Polynomial& coefficient(std::int64_t k) const { return c_.at(static_cast<size_t>(k)); }
    Polynomial& coefficient(std::int64_t k) { return c_.at(static_cast<size_t>(k)); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;  // Cauchy product, truncated
    bool operator==(const TruncatedSeries& o) const;

    TruncatedSeries substitute_value(VarId v, const Rat& value) const;

private:
    VarId var_;
    std::vector<Polynomial> c_;
};

}  // namespace igusa::exactalg
