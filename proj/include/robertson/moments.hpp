#ifndef ROBERTSON_MOMENTS_HPP
#define ROBERTSON_MOMENTS_HPP

#include <optional>

#include "robertson/algebra.hpp"

namespace robertson {

// sigma_{uv} = <XuXv + XvXu>/2 - <Xu><Xv>,  C_{uv} = -(i/2)<[Xu,Xv]>.
struct UncertaintyPair {
    int n = 0;
    RMat sigma;
    RMat cmat;
    std::vector<std::string> labels;
    bool truncation_warning = false;

    double det_sigma() const;
    double det_c() const;
};

struct TraceUrEntry {
    int k;
    double lhs;  // Tr(i sigma J)^{2k}
    double rhs;  // N c0^{2k} / 2^{2k-1}
    double gap;
};

struct InequalityReport {
    double det_sigma = 0;
    double det_c = 0;
    double robertson_gap = 0;   // det sigma - det C
    double product_gap = 0;     // prod sigma_mumu - det sigma
    double heisenberg_gap = 0;  // prod sigma_mumu - det C
    std::vector<TraceUrEntry> trace_ur;
    bool robertson_minimized = false;
    bool product_minimized = false;
};

// Symplectic form [[0, I_N], [-I_N, 0]]; observable order (p_1..p_N, q_1..q_N).
RMat symplectic_form(int N);

UncertaintyPair uncertainty_pair(const std::vector<OperatorMatrix>& ops,
                                 const QuantumState& state,
                                 std::vector<std::string> labels = {});

// Tr(i sigma J)^{2k} for sigma of even dimension.
double trace_ur_lhs(const RMat& sigma, int k);

// trace_orders only for even n; c0sq = 1 is the canonical-variable regime,
// otherwise caller supplies c0^2 from the Williamson output.
InequalityReport inequality_report(const UncertaintyPair& pair,
                                   const std::vector<int>& trace_orders = {},
                                   double c0sq = 1.0,
                                   double tol_scale = 1e-8);

// det C = (1/2)^{2N} prod_j <-i[X_j, Y_j]>^2 for lists (X_1..X_N, Y_1..Y_N)
// whose cross commutators vanish; the pattern is verified on the
// truncation-safe subspace before the product is taken.
double detc_factorized(const std::vector<OperatorMatrix>& ops, const QuantumState& state);

bool robertson_minimized(const UncertaintyPair& pair, double tol = 1e-8);

// c0^2 from the minimal Williamson pair product: c0^2 = (2 min_j d_j d_{N+j})^...
// see transform.hpp (helper lives there to avoid a dependency cycle).

}  // namespace robertson

#endif
