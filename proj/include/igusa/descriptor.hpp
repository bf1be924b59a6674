// Structural descriptors: the pair systems (S_k, sigma_k) that express the
// elementary divisor type of a commutator lattice through pairwise minima of
// projection data, together with the ranks they determine.  The length
// function ell, radical subwords, and admissible compositions all live here.

#pragma once

#include <optional>
#include <set>

#include "igusa/dyck.hpp"
#include "igusa/partition.hpp"
#include "igusa/subword.hpp"

namespace igusa::combinat {

struct DescriptorPair {
    std::vector<int> components;  // S_k: 0-based component indices, strictly increasing
    std::vector<int> sigma;       // positive multiplicities, same length
};

class StructuralDescriptor {
public:
    // nbar: component ranks n_i; inertia: f_i per component; abelian_rank:
    // o-rank folded into A beyond the derived subalgebra (contributes to c and
    // eps only).  c is computed as c' + abelian_rank unless given explicitly.
    StructuralDescriptor(Composition nbar, std::vector<int> inertia,
                         std::vector<DescriptorPair> pairs, int abelian_rank = 0,
                         bool hypothesis_certified = true);

    int m() const { return static_cast<int>(nbar_.size()); }
    const Composition& nbar() const { return nbar_; }
    int n_i(int i) const { return nbar_.at(static_cast<size_t>(i)); }
    int f_i(int i) const { return inertia_.at(static_cast<size_t>(i)); }
    const std::vector<DescriptorPair>& pairs() const { return pairs_; }

    int n() const { return n_; }            // rank of L/A
    int c() const { return c_; }            // rank of A
    int c_prime() const { return cprime_; } // rank of the derived subalgebra
    int eps() const { return c_ - cprime_; }
    int rank() const { return n_ + c_; }    // N_0
    int cocentral_rank() const { return n_; }  // N_1 = rk(L/Z(L)), unramified
    bool hypothesis_certified() const { return certified_; }

    Subword full_word() const { return Subword(nbar_); }

    // ell(v) = sum_k prod_j C(alpha_{s_kj}, sigma_kj).
    std::int64_t ell(const Subword& v) const;
    // The unique radical subword sqrt(v) <= v with ell(sqrt(v)) = ell(v).
    Subword radical(const Subword& v) const;
    bool is_radical(const Subword& v) const { return radical(v) == v; }

    // lambda(nu): the multiset union over pairs of the iterated * operations
    // applied to the projection data; |nu| = m with nu[i] of n_i parts.
    Partition lambda_of_nu(const std::vector<Partition>& nu) const;

    // All radical subwords with their ell values, lexicographically ordered.
    std::vector<std::pair<Subword, std::int64_t>> radical_subwords() const;
    // The set { ell(u) : u radical }, used for Dyck-word pruning.
    std::vector<std::int64_t> achievable_ell() const;

private:
    Composition nbar_;
    std::vector<int> inertia_;
    std::vector<DescriptorPair> pairs_;
    int n_ = 0, c_ = 0, cprime_ = 0;
    bool certified_ = true;
};

// An (nbar, w)-admissible composition: an m x r matrix rho whose cumulative
// row sums P_{ij} trace a flag of radical milestone words w_j with
// ell(w_j) = L_j - eps.
struct AdmissibleComposition {
    std::vector<std::vector<int>> rho;  // rho[i][j], i < m, j < r

    int runs() const { return rho.empty() ? run_count : static_cast<int>(rho[0].size()); }
    int run_count = 0;  // carries r when m = 0

    int P(int i, int j) const;                      // 1-based j; P(i,0) = 0
    Subword milestone(const Composition& n, int j) const;  // w_j
    Composition column(int j) const;                // rho_bar_j, 1-based
    std::vector<std::set<int>> P_sets() const;      // P_i = {P_{ij} : j}
};

// Enumerates M_{nbar,w}: every flag of radical words hitting the milestones
// Ltilde_j = L_j - eps (with v_1 empty exactly when Ltilde_1 = 0), converted
// to matrices.  Deterministic order.  Empty result when w is incompatible.
std::vector<AdmissibleComposition> admissible_compositions(const StructuralDescriptor& d,
                                                           const DyckWord& w);

}  // namespace igusa::combinat
