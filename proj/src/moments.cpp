#include "robertson/moments.hpp"

#include <cmath>

namespace robertson {

static const Cx I{0.0, 1.0};

static double det_lu(const RMat& m) {
    // full-pivot LU: the minimized predicate leans on this determinant
    return Eigen::FullPivLU<RMat>(m).determinant();
}

double UncertaintyPair::det_sigma() const { return det_lu(sigma); }
double UncertaintyPair::det_c() const { return det_lu(cmat); }

RMat symplectic_form(int N) {
    RMat j = RMat::Zero(2 * N, 2 * N);
    j.block(0, N, N, N) = RMat::Identity(N, N);
    j.block(N, 0, N, N) = -RMat::Identity(N, N);
    return j;
}

UncertaintyPair uncertainty_pair(const std::vector<OperatorMatrix>& ops,
                                 const QuantumState& state,
                                 std::vector<std::string> labels) {
    int n = static_cast<int>(ops.size());
    if (n == 0) throw std::invalid_argument("uncertainty_pair: empty observable list");
    for (const auto& op : ops) {
        if (!op.hermitian) throw std::invalid_argument("uncertainty_pair: non-hermitian observable");
        if (op.dim() != state.dim()) throw std::invalid_argument("uncertainty_pair: dimension mismatch");
    }
    UncertaintyPair out;
    out.n = n;
    out.sigma = RMat::Zero(n, n);
    out.cmat = RMat::Zero(n, n);
    out.labels = labels.empty() ? std::vector<std::string>(n, "X") : std::move(labels);
    out.truncation_warning = state.tail_mass() >= 1e-6;

    std::vector<Cx> means(n);
    std::vector<Vec> opv;       // op|psi> for pure states
    Mat rho;
    bool pure = state.is_pure();
    if (pure) {
        opv.reserve(n);
        for (const auto& op : ops) opv.push_back(op.m * state.amplitudes());
        for (int i = 0; i < n; ++i) means[i] = state.amplitudes().dot(opv[i]);
    } else {
        rho = state.density();
        for (int i = 0; i < n; ++i) means[i] = (rho * ops[i].m).trace();
    }

    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu) {
            Cx xy, yx;
            if (pure) {
                xy = opv[mu].dot(opv[nu]);  // <Xmu Xnu>
                yx = opv[nu].dot(opv[mu]);
            } else {
                xy = (rho * ops[mu].m * ops[nu].m).trace();
                yx = (rho * ops[nu].m * ops[mu].m).trace();
            }
            Cx s = 0.5 * (xy + yx) - means[mu] * means[nu];
            Cx c = -0.5 * I * (xy - yx);
            // scale-aware: operators with huge dynamic range (q-deformed at
            // q > 1) make an absolute bound on the rounding residue unreachable
            double scale = std::max({1.0, std::abs(xy), std::abs(yx)});
            if (std::abs(s.imag()) > 1e-10 * scale || std::abs(c.imag()) > 1e-10 * scale)
                throw std::logic_error("uncertainty_pair: imaginary residue above tolerance");
            out.sigma(mu, nu) = out.sigma(nu, mu) = s.real();
            out.cmat(mu, nu) = c.real();
            out.cmat(nu, mu) = -c.real();
        }
    return out;
}

double trace_ur_lhs(const RMat& sigma, int k) {
    int n = static_cast<int>(sigma.rows());
    if (n % 2 != 0) throw std::invalid_argument("trace_ur_lhs: even dimension required");
    RMat sj = sigma * symplectic_form(n / 2);
    RMat pw = RMat::Identity(n, n);
    for (int i = 0; i < 2 * k; ++i) pw = pw * sj;
    // (i)^{2k} = (-1)^k
    return ((k % 2) ? -1.0 : 1.0) * pw.trace();
}

InequalityReport inequality_report(const UncertaintyPair& pair,
                                   const std::vector<int>& trace_orders,
                                   double c0sq,
                                   double tol_scale) {
    InequalityReport rep;
    rep.det_sigma = pair.det_sigma();
    rep.det_c = pair.det_c();
    rep.robertson_gap = rep.det_sigma - rep.det_c;
    double prod = 1.0;
    for (int i = 0; i < pair.n; ++i) prod *= pair.sigma(i, i);
    rep.product_gap = prod - rep.det_sigma;
    rep.heisenberg_gap = prod - rep.det_c;
    double tol = tol_scale * std::max(1.0, std::abs(rep.det_sigma));
    rep.robertson_minimized = std::abs(rep.robertson_gap) <= tol;
    rep.product_minimized = std::abs(rep.product_gap) <= tol;
    if (!trace_orders.empty()) {
        if (pair.n % 2 != 0)
            throw std::invalid_argument("inequality_report: trace orders need even n");
        int N = pair.n / 2;
        for (int k : trace_orders) {
            TraceUrEntry e;
            e.k = k;
            e.lhs = trace_ur_lhs(pair.sigma, k);
            e.rhs = N * std::pow(c0sq, k) / std::pow(2.0, 2 * k - 1);
            e.gap = e.lhs - e.rhs;
            rep.trace_ur.push_back(e);
        }
    }
    return rep;
}

double detc_factorized(const std::vector<OperatorMatrix>& ops, const QuantumState& state) {
    int n = static_cast<int>(ops.size());
    if (n % 2 != 0) throw std::invalid_argument("detc_factorized: even observable count required");
    int N = n / 2;
    int safe = state.dim();
    for (const auto& op : ops) safe = std::min(safe, op.exact_dim);
    if (safe < 1)
        throw std::invalid_argument(
            "detc_factorized: no truncation-safe subspace to verify the pairing structure");
    // verify the commutation pattern on the truncation-safe subspace
    auto comm = [&](int a, int b) { return Mat(ops[a].m * ops[b].m - ops[b].m * ops[a].m); };
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            double d1 = comm(j, k).topLeftCorner(safe, safe).cwiseAbs().maxCoeff();
            double d2 = comm(N + j, N + k).topLeftCorner(safe, safe).cwiseAbs().maxCoeff();
            if (d1 > 1e-8 || d2 > 1e-8)
                throw std::invalid_argument("detc_factorized: pairing structure violated ([X,X] block)");
            if (j != k) {
                double d3 = comm(j, N + k).topLeftCorner(safe, safe).cwiseAbs().maxCoeff();
                if (d3 > 1e-8)
                    throw std::invalid_argument("detc_factorized: pairing structure violated ([X,Y] block)");
            }
        }
    double prod = 1.0;
    for (int j = 0; j < N; ++j) {
        Cx c = expectation(Mat(-I * comm(j, N + j)), state);
        prod *= 0.25 * c.real() * c.real();
    }
    return prod;
}

bool robertson_minimized(const UncertaintyPair& pair, double tol) {
    double ds = pair.det_sigma(), dc = pair.det_c();
    return std::abs(ds - dc) <= tol * std::max(1.0, std::abs(dc));
}

}  // namespace robertson
