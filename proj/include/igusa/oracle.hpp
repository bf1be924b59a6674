// Brute-force and semi-structural counting of ideals, sublattices, and
// subgroups at small primes: the ground truth every symbolic output is
// validated against.

#pragma once

#include <cstdint>
#include <functional>

#include "igusa/lie_ring.hpp"
#include "igusa/series.hpp"
#include "igusa/zeta.hpp"

namespace igusa::oracle {

using combinat::Partition;
using exactalg::Int;

struct Budget {
    std::uint64_t max_hnf = 100000000;  // cap on enumerated Hermite bases per call
    int threads = 1;
};

struct BudgetExceeded : std::runtime_error {
    std::uint64_t estimate;
    explicit BudgetExceeded(std::uint64_t est)
        : std::runtime_error("enumeration budget exceeded; estimated Hermite count " +
                             std::to_string(est)),
          estimate(est) {}
};

// Number of Hermite bases of index p^k in Z^rank (the enumeration cost).
std::uint64_t hnf_count(int rank, std::int64_t p, int k);

// Row-style Hermite normal form: upper triangular, diagonal p^{a_i}, the
// entry in row i, column j (i < j) reduced modulo the column pivot p^{a_j}.
// `visit` receives the basis rows; enumeration order is deterministic.
void for_each_hnf(int rank, std::int64_t p, int k,
                  const std::function<void(const std::vector<std::vector<std::int64_t>>&)>& visit,
                  const Budget& budget = {});

// Number of sublattices of index p^k closed under bracket with every basis
// vector (the k-th Dirichlet coefficient of the ideal zeta function at p).
// A nonempty module_action further restricts to sublattices closed under the
// given linear map (row i = image of basis vector i), which counts the
// O-module ideals of a ring of restricted scalars.
Int hnf_ideal_count(const zeta::BracketTable& b, std::int64_t p, int k, const Budget& budget = {},
                    const std::vector<std::vector<std::int64_t>>& module_action = {});

// Same coefficient through the two-step reduction: sum over lattices in the
// rank-n quotient L/A times weighted counts of intermediate lattices M with
// [Lambda, L] <= M <= A.  A_indices must span a central subalgebra containing
// the derived subalgebra, with free quotient.
Int structural_ideal_count(const zeta::BracketTable& b, const std::vector<int>& A_indices,
                           std::int64_t p, int k, const Budget& budget = {});

// Number of sublattices of Z^n of elementary divisor type nu at the prime p.
Int count_sublattices_by_type(int n, std::int64_t p, const Partition& nu,
                              const Budget& budget = {});

// Number of subgroups of isomorphism type mu inside the finite abelian
// p-group of type lambda.
Int count_subgroups(const Partition& lambda, const Partition& mu, std::int64_t p,
                    const Budget& budget = {});

// The defining sum of one (w, rho) block, summed directly over projection
// data and partitions mu with all parts <= bound; exact to t-degree `bound`.
exactalg::TruncatedSeries delta_truncated(const combinat::StructuralDescriptor& d,
                                          const combinat::DyckWord& w,
                                          const combinat::AdmissibleComposition& rho, int bound);

// All partitions with exactly `parts` parts bounded by max_part (test helper
// and the domain of delta_truncated).
std::vector<Partition> partitions_bounded(int parts, std::int64_t max_part);

}  // namespace igusa::oracle
