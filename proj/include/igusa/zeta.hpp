// Assembly of explicit local ideal zeta functions: the numerical data of each
// (Dyck word, admissible composition) block, the block functions D_{w,rho},
// their per-block functional equation, and the full zeta function with its
// abelian prefactor.

#pragma once

#include <map>

#include "igusa/descriptor.hpp"
#include "igusa/igusa_fn.hpp"
#include "igusa/lie_ring.hpp"
#include "igusa/rational_function.hpp"

namespace igusa::zeta {

using combinat::AdmissibleComposition;
using combinat::DyckWord;
using combinat::StructuralDescriptor;
using combinat::Subword;
using exactalg::Monomial;
using exactalg::Rat;
using exactalg::RationalFunction;

inline exactalg::VarId q_var() { return exactalg::var("q"); }
inline exactalg::VarId t_var() { return exactalg::var("t"); }

// zeta_{o^n}(s) = prod_{i=1}^{n} 1/(1 - q^{i-1} t).
RationalFunction abelian_zeta(int n);
// zeta of O^n for an unramified extension of inertia degree f:
// prod_{k=1}^{n} 1/(1 - q^{f(k-1)} t^f).
RationalFunction component_zeta(int n, int f);

// Numerical data attached to a block: x_k for k in (M_{j-1}, M_j], and
// y_v^{(j)} for each nonempty subword v of the j-th column word.
struct NumericalData {
    std::vector<Monomial> x;                        // x_1..x_c (1-based via index+1)
    std::vector<std::map<Subword, Monomial>> y;     // y[j-1]: data for block j
    std::vector<std::map<Subword, int>> delta;      // delta_v^{(j)} in {0,1}
};
NumericalData numerical_data(const StructuralDescriptor& d, const DyckWord& w,
                             const AdmissibleComposition& rho);

RationalFunction D_w_rho(const StructuralDescriptor& d, const DyckWord& w,
                         const AdmissibleComposition& rho);

// Functional equation of one block (checked during assembly):
// D(q^{-1}, t^{-1}) = (-1)^{c + sum n_i} q^{C(n+c,2) - C(n,2) + sum f_i C(n_i,2)}
//                     t^{c + 2 sum n_i f_i} D(q, t).
bool check_dwrho_funeq(const StructuralDescriptor& d, const RationalFunction& block);

struct ZetaOptions {
    bool assert_block_funeq = true;  // verify each D_{w,rho} while assembling
    int c_guard = 10;                // Dyck enumeration guard: require override above this
    bool override_guard = false;
    int threads = 1;                 // parallel map over (w, rho); reduction order fixed
};

struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RationalFunction zeta_ideal(const StructuralDescriptor& d, const ZetaOptions& opt = {});
RationalFunction zeta_ideal(const LieRingSpec& spec, const ZetaOptions& opt = {});

// q -> q^f, t -> t^f.
RationalFunction base_extend(const RationalFunction& z, int f);

struct FuneqReport {
    bool holds = false;
    int N0 = 0;
    int N1 = 0;
};
FuneqReport check_local_funeq(const LieRingSpec& spec, const ZetaOptions& opt = {});

// Abscissa of convergence: max{n, a/b} over denominator factors 1 - q^a t^b
// of the reduced form; factors with b = 0 are rejected.
Rat abscissa(const RationalFunction& z, int n);

}  // namespace igusa::zeta
