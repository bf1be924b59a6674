#include "igusa/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace igusa::exactalg {

namespace {
struct VarPool {
    std::mutex mu;
    std::unordered_map<std::string, VarId> ids;
    std::vector<std::string> names;
};
VarPool& pool() {
    static VarPool p;
    return p;
}
}  // namespace

VarId var(const std::string& name) {
    auto& p = pool();
    std::lock_guard<std::mutex> lock(p.mu);
    auto it = p.ids.find(name);
    if (it != p.ids.end()) return it->second;
    VarId id = static_cast<VarId>(p.names.size());
    p.names.push_back(name);
    p.ids.emplace(name, id);
    return id;
}

const std::string& var_name(VarId v) {
    auto& p = pool();
    std::lock_guard<std::mutex> lock(p.mu);
    return p.names.at(static_cast<size_t>(v));
}

Monomial Monomial::of(VarId v, std::int64_t e) {
    Monomial m;
    if (e != 0) m.e_.emplace_back(v, e);
    return m;
}

Monomial Monomial::from_pairs(Exponents pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : pairs) {
        if (!m.e_.empty() && m.e_.back().first == v)
            m.e_.back().second += e;
        else
            m.e_.emplace_back(v, e);
        if (!m.e_.empty() && m.e_.back().second == 0) m.e_.pop_back();
    }
    return m;
}

std::int64_t Monomial::exponent(VarId v) const {
    for (auto& [w, e] : e_)
        if (w == v) return e;
    return 0;
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (auto& [v, e] : e_) d += e;
    return d;
}

bool Monomial::all_nonnegative() const {
    for (auto& [v, e] : e_)
        if (e < 0) return false;
    return true;
}

bool Monomial::all_nonpositive() const {
    for (auto& [v, e] : e_)
        if (e > 0) return false;
    return true;
}

bool Monomial::involves_any(const std::set<VarId>& vars) const {
    for (auto& [v, e] : e_)
        if (vars.count(v)) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            r.e_.push_back(e_[i++]);
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            std::int64_t s = e_[i].second + o.e_[j].second;
            if (s != 0) r.e_.emplace_back(e_[i].first, s);
            ++i, ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(std::int64_t k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_ = e_;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

Monomial Monomial::invert_vars(const std::set<VarId>& vars) const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_)
        if (vars.count(v)) e = -e;
    return r;
}

Monomial Monomial::substitute(VarId v, const Monomial& replacement) const {
    std::int64_t e = exponent(v);
    if (e == 0) return *this;
    Monomial rest;
    for (auto& [w, f] : e_)
        if (w != v) rest.e_.emplace_back(w, f);
    return rest * replacement.pow(e);
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    size_t n = std::min(e_.size(), o.e_.size());
    for (size_t k = 0; k < n; ++k) {
        if (auto c = e_[k].first <=> o.e_[k].first; c != 0) return c;
        if (auto c = e_[k].second <=> o.e_[k].second; c != 0) return c;
    }
    return e_.size() <=> o.e_.size();
}

}  // namespace igusa::exactalg
