#include "igusa/subword.hpp"

#include <stdexcept>

namespace igusa::combinat {

bool Subword::is_empty() const {
    for (int x : a_)
        if (x != 0) return false;
    return true;
}

int Subword::degree() const {
    int d = 0;
    for (int x : a_) d += x;
    return d;
}

bool Subword::operator<=(const Subword& o) const {
    if (a_.size() != o.a_.size()) throw std::domain_error("Subword: ambient mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] > o.a_[i]) return false;
    return true;
}

Subword Subword::operator*(const Subword& o) const {
    if (a_.size() != o.a_.size()) throw std::domain_error("Subword: ambient mismatch");
    std::vector<int> r(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) r[i] = a_[i] + o.a_[i];
    return Subword(std::move(r));
}

Subword Subword::quotient(const Subword& o) const {
    if (!(o <= *this)) throw std::domain_error("Subword::quotient: not a subword");
    std::vector<int> r(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) r[i] = a_[i] - o.a_[i];
    return Subword(std::move(r));
}

std::string Subword::name() const {
    std::string s;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        if (!s.empty()) s += '.';
        s += "a" + std::to_string(i + 1);
        if (a_[i] > 1) s += "^" + std::to_string(a_[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Subword> all_subwords(const Composition& n, bool include_empty) {
    std::vector<Subword> out;
    std::vector<int> cur(n.size(), 0);
    while (true) {
        Subword w(cur);
        if (include_empty || !w.is_empty()) out.push_back(w);
        size_t i = n.size();
        while (i > 0) {
            --i;
            if (cur[i] < n[i]) {
                ++cur[i];
                for (size_t j = i + 1; j < n.size(); ++j) cur[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (n.empty()) return out;
    }
}

void for_each_flag(const Composition& n, const std::function<void(const Flag&)>& f) {
    std::vector<Subword> words = all_subwords(n, /*include_empty=*/false);
    Flag cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        f(cur);
        for (size_t i = from; i < words.size(); ++i) {
            if (!cur.empty() && !cur.back().strictly_less(words[i])) continue;
            cur.push_back(words[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    // Words are in lexicographic order, which refines nothing useful for
    // chains, so the recursion filters by the chain condition directly.
    rec(0);
}

}  // namespace igusa::combinat
