#include "igusa/series.hpp"

#include <stdexcept>

namespace igusa::exactalg {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (var_ != o.var_ || c_.size() != o.c_.size())
        throw std::domain_error("TruncatedSeries: incompatible operands");
    TruncatedSeries r = *this;
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (var_ != o.var_ || c_.size() != o.c_.size())
        throw std::domain_error("TruncatedSeries: incompatible operands");
    TruncatedSeries r(var_, cutoff());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_ == o.var_ && c_ == o.c_;
}

TruncatedSeries TruncatedSeries::substitute_value(VarId v, const Rat& value) const {
    TruncatedSeries r(var_, cutoff());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k].substitute_value(v, value);
    return r;
}

}  // namespace igusa::exactalg
