#include "igusa/descriptor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace igusa::combinat {

namespace {
std::int64_t binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}
}  // namespace

StructuralDescriptor::StructuralDescriptor(Composition nbar, std::vector<int> inertia,
                                           std::vector<DescriptorPair> pairs, int abelian_rank,
                                           bool hypothesis_certified)
    : nbar_(std::move(nbar)), inertia_(std::move(inertia)), pairs_(std::move(pairs)),
      certified_(hypothesis_certified) {
    if (nbar_.size() != inertia_.size())
        throw std::domain_error("StructuralDescriptor: one inertia degree per component");
    for (size_t i = 0; i < nbar_.size(); ++i) {
        if (nbar_[i] < 1 || inertia_[i] < 1)
            throw std::domain_error("StructuralDescriptor: component ranks and inertia degrees must be positive");
        n_ += nbar_[i] * inertia_[i];
    }
    std::vector<char> covered(nbar_.size(), 0);
    for (auto& p : pairs_) {
        if (p.components.empty() || p.components.size() != p.sigma.size())
            throw std::domain_error("StructuralDescriptor: malformed pair");
        std::int64_t contrib = 1;
        int prev = -1;
        for (size_t j = 0; j < p.components.size(); ++j) {
            int s = p.components[j];
            if (s <= prev || s >= m()) throw std::domain_error("StructuralDescriptor: bad component index");
            if (p.sigma[j] < 1) throw std::domain_error("StructuralDescriptor: sigma must be positive");
            contrib *= binom(nbar_[static_cast<size_t>(s)], p.sigma[j]);
            covered[static_cast<size_t>(s)] = 1;
            prev = s;
        }
        cprime_ += static_cast<int>(contrib);
    }
    for (size_t i = 0; i < covered.size(); ++i)
        if (!covered[i])
            throw std::domain_error("StructuralDescriptor: component " + std::to_string(i + 1) +
                                    " occurs in no pair; fold inert components into the abelian rank");
    if (abelian_rank < 0) throw std::domain_error("StructuralDescriptor: negative abelian rank");
    c_ = cprime_ + abelian_rank;
}

std::int64_t StructuralDescriptor::ell(const Subword& v) const {
    std::int64_t total = 0;
    for (auto& p : pairs_) {
        std::int64_t term = 1;
        for (size_t j = 0; j < p.components.size() && term != 0; ++j)
            term *= binom(v.alpha(static_cast<size_t>(p.components[j])), p.sigma[j]);
        total += term;
    }
    return total;
}

Subword StructuralDescriptor::radical(const Subword& v) const {
    std::vector<char> keep(nbar_.size(), 0);
    for (auto& p : pairs_) {
        bool active = true;
        for (size_t j = 0; j < p.components.size(); ++j)
            if (v.alpha(static_cast<size_t>(p.components[j])) < p.sigma[j]) {
                active = false;
                break;
            }
        if (active)
            for (int s : p.components) keep[static_cast<size_t>(s)] = 1;
    }
    std::vector<int> a(nbar_.size(), 0);
    for (size_t i = 0; i < nbar_.size(); ++i)
        if (keep[i]) a[i] = v.alpha(i);
    return Subword(std::move(a));
}

Partition StructuralDescriptor::lambda_of_nu(const std::vector<Partition>& nu) const {
    if (static_cast<int>(nu.size()) != m())
        throw std::domain_error("lambda_of_nu: need one partition per component");
    for (int i = 0; i < m(); ++i)
        if (static_cast<int>(nu[static_cast<size_t>(i)].length()) != n_i(i))
            throw std::domain_error("lambda_of_nu: partition length must match component rank");
    std::vector<std::int64_t> values;
    for (auto& p : pairs_) {
        std::optional<Partition> acc;
        for (size_t j = 0; j < p.components.size(); ++j) {
            Partition piece = star_power(nu[static_cast<size_t>(p.components[j])], p.sigma[j]);
            acc = acc ? star(*acc, piece) : piece;
        }
        for (auto x : acc->parts()) values.push_back(x);
    }
    Partition out = Partition::from_multiset(std::move(values));
    if (static_cast<int>(out.length()) != cprime_)
        throw std::logic_error("lambda_of_nu: length mismatch against c'");
    return out;
}

std::vector<std::pair<Subword, std::int64_t>> StructuralDescriptor::radical_subwords() const {
    std::vector<std::pair<Subword, std::int64_t>> out;
    for (auto& w : all_subwords(nbar_, /*include_empty=*/true))
        if (is_radical(w)) out.emplace_back(w, ell(w));
    return out;
}

std::vector<std::int64_t> StructuralDescriptor::achievable_ell() const {
    std::set<std::int64_t> s;
    for (auto& [w, l] : radical_subwords()) s.insert(l);
    return std::vector<std::int64_t>(s.begin(), s.end());
}

int AdmissibleComposition::P(int i, int j) const {
    int s = 0;
    for (int k = 0; k < j; ++k) s += rho.at(static_cast<size_t>(i)).at(static_cast<size_t>(k));
    return s;
}

Subword AdmissibleComposition::milestone(const Composition& n, int j) const {
    std::vector<int> a(n.size());
    for (size_t i = 0; i < n.size(); ++i) a[i] = P(static_cast<int>(i), j);
    return Subword(std::move(a));
}

Composition AdmissibleComposition::column(int j) const {
    Composition col(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) col[i] = rho[i].at(static_cast<size_t>(j - 1));
    return col;
}

std::vector<std::set<int>> AdmissibleComposition::P_sets() const {
    std::vector<std::set<int>> out(rho.size());
    for (size_t i = 0; i < rho.size(); ++i)
        for (int j = 1; j <= runs(); ++j) out[i].insert(P(static_cast<int>(i), j));
    return out;
}

std::vector<AdmissibleComposition> admissible_compositions(const StructuralDescriptor& d,
                                                           const DyckWord& w) {
    std::vector<AdmissibleComposition> out;
    int eps = d.eps();
    int r = w.runs();
    if (w.c() != d.c()) throw std::domain_error("admissible_compositions: Dyck word length must be 2c");
    if (w.L(1) < eps) return out;  // the sum over this word is empty

    // Radical words grouped by ell, each group lexicographically sorted.
    std::map<std::int64_t, std::vector<Subword>> groups;
    for (auto& [u, l] : d.radical_subwords()) groups[l].push_back(u);
    for (int j = 1; j <= r; ++j)
        if (!groups.count(w.L(j) - eps)) return out;

    std::vector<Subword> chain;
    std::function<void(int)> rec = [&](int j) {
        if (j > r) {
            AdmissibleComposition ac;
            ac.run_count = r;
            ac.rho.assign(static_cast<size_t>(d.m()), std::vector<int>(static_cast<size_t>(r), 0));
            Subword prev = Subword::empty(static_cast<size_t>(d.m()));
            for (int k = 1; k <= r; ++k) {
                Subword q = chain[static_cast<size_t>(k - 1)].quotient(prev);
                for (int i = 0; i < d.m(); ++i)
                    ac.rho[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] = q.alpha(static_cast<size_t>(i));
                prev = chain[static_cast<size_t>(k - 1)];
            }
            out.push_back(std::move(ac));
            return;
        }
        std::int64_t target = w.L(j) - eps;
        for (auto& u : groups[target]) {
            if (j == r && !(u == d.full_word())) continue;  // P_{ir} = n_i
            if (j == 1) {
                // v_1 is empty exactly when Ltilde_1 = 0 (only the empty word
                // has ell = 0 among radical words).
                if (target == 0 && !u.is_empty()) continue;
                if (target > 0 && u.is_empty()) continue;
            } else {
                const Subword& prev = chain[static_cast<size_t>(j - 2)];
                if (!prev.strictly_less(u)) continue;
            }
            chain.push_back(u);
            rec(j + 1);
            chain.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace igusa::combinat
