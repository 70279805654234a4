#include "robertson/ris.hpp"

#include <array>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace robertson {

static const Cx I{0.0, 1.0};

// ---------------------------------------------------------------------------
// su(1,1)
// ---------------------------------------------------------------------------

bool su11_normalizable(Cx u, Cx v, Cx w) {
    if (std::abs(u) == 0.0) return false;
    Cx s = std::sqrt(w * w - 4.0 * u * v);  // principal branch, Re >= 0
    double au2 = 2.0 * std::abs(u);
    return std::abs(w - s) < au2 || std::abs(w + s) < au2;
}

// weight-basis coefficients of the eigenstate of uK- + vK+ + wK3, c_0 = 1,
// computed in extended precision and renormalized every 64 steps
static std::vector<Cx> su11_recursion(Cx u, Cx v, Cx w, Cx z, double kv, int M) {
    using CL = std::complex<long double>;
    CL ul(u.real(), u.imag()), vl(v.real(), v.imag());
    CL wl(w.real(), w.imag()), zl(z.real(), z.imag());
    std::vector<CL> c(M);
    c[0] = 1.0L;
    long double scale_log = 0.0L;  // kept for overflow safety of intermediate scaling
    for (int m = 0; m + 1 < M; ++m) {
        CL prev = (m > 0) ? c[m - 1] : CL(0.0L);
        long double down = (m > 0) ? std::sqrt(static_cast<long double>(m) * (m + 2.0L * kv - 1.0L)) : 0.0L;
        long double up = std::sqrt((m + 1.0L) * (m + 2.0L * kv));
        c[m + 1] = -(vl * down * prev + (wl * static_cast<long double>(m + kv) - zl) * c[m]) /
                   (ul * up);
        if ((m + 1) % 64 == 0) {
            long double mx = 0.0L;
            for (int i = std::max(0, m - 63); i <= m + 1; ++i) mx = std::max(mx, std::abs(c[i]));
            if (mx > 1e100L) {
                for (auto& x : c) x /= mx;
                scale_log += std::log(mx);
            }
        }
    }
    (void)scale_log;
    long double norm2 = 0.0L, comp = 0.0L;
    for (const auto& x : c) {  // compensated accumulation
        long double t = std::norm(x) - comp;
        long double s = norm2 + t;
        comp = (s - norm2) - t;
        norm2 = s;
    }
    long double nrm = std::sqrt(norm2);
    std::vector<Cx> out(M);
    for (int m = 0; m < M; ++m)
        out[m] = Cx(static_cast<double>(c[m].real() / nrm), static_cast<double>(c[m].imag() / nrm));
    return out;
}

RisState su11_ris(Cx u, Cx v, Cx w, Cx z, Rational k, int M, int max_m) {
    if (std::abs(u) == 0.0)
        throw UnsupportedLimitError("su11_ris: u = 0 limit not supported");
    if (!admissible_bargmann(k))
        throw std::domain_error("su11_ris: inadmissible Bargmann index");
    if (!su11_normalizable(u, v, w))
        throw NonNormalizableError(
            "su11_ris: normalizability violated, both branches of |w -+ sqrt(w^2-4uv)| >= 2|u|");
    double kv = k.value();
    M = std::max(M, 16);
    RisState out;
    out.family = RisFamily::Su11;
    out.hermitian_combination =
        std::abs(v - std::conj(u)) < 1e-12 && std::abs(w.imag()) < 1e-12;
    if (out.hermitian_combination) {
        // The recursion's two characteristic roots have product v/u of modulus
        // one here, so forward recursion always couples into the growing
        // branch; solve the hermitian tridiagonal eigenproblem instead and
        // require z to sit on the discrete spectrum.
        if (std::abs(z.imag()) > 1e-8)
            throw NonNormalizableError(
                "su11_ris: hermitian combination has real spectrum, Im z != 0");
        while (true) {
            Mat op = Mat::Zero(M, M);
            for (int m = 0; m < M; ++m) {
                op(m, m) = w.real() * (m + kv);
                if (m + 1 < M) {
                    Cx upper = u * std::sqrt((m + 1.0) * (m + 2.0 * kv));
                    op(m, m + 1) = upper;
                    op(m + 1, m) = std::conj(upper);
                }
            }
            Eigen::SelfAdjointEigenSolver<Mat> es(op);
            int best = 0;
            for (int i = 1; i < M; ++i)
                if (std::abs(es.eigenvalues()(i) - z.real()) <
                    std::abs(es.eigenvalues()(best) - z.real()))
                    best = i;
            double mismatch = std::abs(es.eigenvalues()(best) - z.real());
            Vec amps = es.eigenvectors().col(best);
            // deterministic phase, mirroring the c_0 = 1 convention
            int lead = 0;
            while (lead + 1 < M && std::abs(amps(lead)) < 1e-12) ++lead;
            amps *= std::conj(amps(lead)) / std::abs(amps(lead));
            QuantumState st = QuantumState::pure(amps);
            double tail = st.tail_mass();
            if (tail < 1e-6 && mismatch > 1e-8 * std::max(1.0, std::abs(z)))
                throw NonNormalizableError(
                    "su11_ris: z is not in the discrete spectrum of the hermitian combination");
            if (mismatch < 1e-8 * std::max(1.0, std::abs(z)) && tail < 1e-6) {
                Vec applied = op * st.amplitudes();
                out.state = std::move(st);
                out.residual = (applied - z * out.state.amplitudes()).norm();
                out.tail_mass = tail;
                out.converged = true;
                return out;
            }
            if (M >= max_m)
                throw TruncationError(
                    "su11_ris: hermitian solve did not converge up to M = " +
                    std::to_string(M) + "; increase max_m");
            M = std::min(2 * M, max_m);
        }
    }
    while (true) {
        std::vector<Cx> c = su11_recursion(u, v, w, z, kv, M);
        Vec amps = Eigen::Map<Vec>(c.data(), M);
        // tridiagonal action of u K- + v K+ + w K3; dense matrices at the
        // adaptive upper dimensions would not fit in memory
        Vec applied(M);
        for (int m = 0; m < M; ++m) {
            Cx acc = w * (m + kv) * amps(m);
            if (m + 1 < M) acc += u * std::sqrt((m + 1.0) * (m + 2.0 * kv)) * amps(m + 1);
            if (m > 0) acc += v * std::sqrt(m * (m + 2.0 * kv - 1.0)) * amps(m - 1);
            applied(m) = acc;
        }
        double residual = (applied - z * amps).norm();
        QuantumState st = QuantumState::pure(amps);
        double tail = st.tail_mass();
        if (residual < 1e-8 && tail < 1e-6) {
            out.state = std::move(st);
            out.residual = residual;
            out.tail_mass = tail;
            out.converged = true;
            return out;
        }
        if (M >= max_m) {
            out.state = std::move(st);
            out.residual = residual;
            out.tail_mass = tail;
            out.converged = false;
            throw TruncationError("su11_ris: no convergence up to M = " + std::to_string(M) +
                                  " (residual " + std::to_string(residual) + ", tail " +
                                  std::to_string(tail) + "); increase max_m");
        }
        M = std::min(2 * M, max_m);
    }
}

UncertaintyPair su11_sigma_closed_form(Cx u, Cx v, double mean_k3) {
    double au = std::abs(u), av = std::abs(v);
    if (std::abs(au - av) < 1e-12)
        throw std::domain_error("su11_sigma_closed_form: |u| = |v| degenerate");
    double den = au * au - av * av;
    UncertaintyPair pair;
    pair.n = 2;
    pair.labels = {"K1", "K2"};
    pair.sigma = RMat(2, 2);
    pair.sigma(0, 0) = 0.5 * std::norm(u - v) * mean_k3 / den;
    pair.sigma(1, 1) = 0.5 * std::norm(u + v) * mean_k3 / den;
    pair.sigma(0, 1) = pair.sigma(1, 0) = std::imag(std::conj(u) * v) * mean_k3 / den;
    pair.cmat = RMat::Zero(2, 2);
    // C_12 = -(i/2)<[K1,K2]> = -(i/2)(-i<K3>) = -<K3>/2
    pair.cmat(0, 1) = -mean_k3 / 2.0;
    pair.cmat(1, 0) = mean_k3 / 2.0;
    return pair;
}

// ---------------------------------------------------------------------------
// su(2)
// ---------------------------------------------------------------------------

Su2RisResult su2_ris(const std::array<Cx, 3>& beta, Rational j) {
    Cx b2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
    if (std::abs(b2) < 1e-14)
        throw ExcludedParameterError("su2_ris: b^2 = beta.beta = 0 excluded (no mb quantization)");
    SpinOps ops = build_spin(j);
    int dim = ops.j1.dim();
    Mat bj = beta[0] * ops.j1.m + beta[1] * ops.j2.m + beta[2] * ops.j3.m;
    Eigen::ComplexEigenSolver<Mat> es(bj);
    Cx b = std::sqrt(b2);
    double jv = j.value();

    Su2RisResult out;
    out.b = b;
    std::vector<bool> used(dim, false);
    for (int im = 0; im < dim; ++im) {
        double m = -jv + im;
        Cx target = m * b;
        int best = -1;
        double bestd = std::numeric_limits<double>::infinity();
        for (int e = 0; e < dim; ++e) {
            if (used[e]) continue;
            double d = std::abs(es.eigenvalues()(e) - target);
            if (d < bestd) { bestd = d; best = e; }
        }
        used[best] = true;
        Vec v = es.eigenvectors().col(best);
        v /= v.norm();
        RisState s;
        s.family = RisFamily::Su2;
        s.state = QuantumState::pure(v);
        s.residual = (bj * v - target * v).norm();
        s.tail_mass = 0.0;  // finite-dimensional, no truncation
        s.converged = s.residual < 1e-8;
        out.states.push_back(std::move(s));
        out.eigenvalues.push_back(es.eigenvalues()(best));
    }
    return out;
}

// ---------------------------------------------------------------------------
// canonical multimode
// ---------------------------------------------------------------------------

static RisState canonical_ris_attempt(const Mat& u, const Mat& v, const Vec& alpha, int D) {
    int N = static_cast<int>(u.rows());
    Mat V(2 * N, 2 * N);
    V.topLeftCorner(N, N) = u;
    V.topRightCorner(N, N) = v;
    V.bottomLeftCorner(N, N) = v.conjugate();
    V.bottomRightCorner(N, N) = u.conjugate();
    Eigen::FullPivLU<Mat> lu(V);
    if (!lu.isInvertible())
        throw std::invalid_argument("canonical_ris: transformation matrix V is singular");
    Mat uinv = Eigen::FullPivLU<Mat>(u).inverse();
    Mat W = -uinv * v;
    if ((W - W.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument(
            "canonical_ris: -u^-1 v not symmetric, no simultaneous eigenstate exists");
    Vec xi = uinv * alpha;

    ModeSystem sys;
    for (int i = 0; i < N; ++i) sys.modes.push_back(BasisSpec::fock(D));
    long total = sys.total_dim();
    BosonOps b = build_boson(D);
    std::vector<Mat> a(N), ad(N);
    for (int i = 0; i < N; ++i) {
        a[i] = tensor_embed(b.a, i, sys).m;
        ad[i] = a[i].adjoint();
    }
    // G = xi . a† + (1/2) a† W a† is strictly raising, so exp(G)|0> is a finite sum
    Mat G = Mat::Zero(total, total);
    for (int i = 0; i < N; ++i) {
        G += xi(i) * ad[i];
        for (int jj = 0; jj < N; ++jj) G += 0.5 * W(i, jj) * ad[i] * ad[jj];
    }
    Vec psi = Vec::Zero(total), term = Vec::Zero(total);
    term(0) = 1.0;
    psi = term;
    for (int kstep = 1; kstep <= N * D + 2; ++kstep) {
        term = (G * term) / static_cast<double>(kstep);
        psi += term;
        if (term.norm() < 1e-18 * psi.norm()) break;
    }
    QuantumState st = QuantumState::pure(psi);

    RisState out;
    out.family = RisFamily::CanonicalMultimode;
    double residual = 0.0;
    for (int jj = 0; jj < N; ++jj) {
        Mat aprime = Mat::Zero(total, total);
        for (int kk = 0; kk < N; ++kk) aprime += u(jj, kk) * a[kk] + v(jj, kk) * ad[kk];
        double r = (aprime * st.amplitudes() - alpha(jj) * st.amplitudes()).norm();
        residual = std::max(residual, r);
    }
    out.residual = residual;
    out.tail_mass = st.tail_mass();
    out.state = std::move(st);
    out.converged = residual < 1e-8 && out.tail_mass < 1e-6;
    return out;
}

RisState canonical_ris(const Mat& u, const Mat& v, const Vec& alpha, int D, int max_d) {
    D = std::max(D, 8);
    while (true) {
        RisState s = canonical_ris_attempt(u, v, alpha, D);
        if (s.converged) return s;
        if (D >= max_d)
            throw TruncationError("canonical_ris: no convergence up to per-mode D = " +
                                  std::to_string(D) + " (residual " + std::to_string(s.residual) +
                                  ")");
        D = std::min(2 * D, max_d);
    }
}

RisState canonical_ris(Cx u, Cx v, Cx alpha, int D) {
    Mat um(1, 1), vm(1, 1);
    um(0, 0) = u;
    vm(0, 0) = v;
    Vec al(1);
    al(0) = alpha;
    return canonical_ris(um, vm, al, D);
}

// ---------------------------------------------------------------------------
// Gaussian coordinate wavefunction
// ---------------------------------------------------------------------------

GaussianWavefunction gaussian_wavefunction(const Mat& u, const Mat& v, const Vec& alpha,
                                           const std::vector<RVec>& grid) {
    int N = static_cast<int>(u.rows());
    if (N != 1 && N != 2)
        throw std::invalid_argument("gaussian_wavefunction: N in {1,2} supported");
    Mat umv = u - v;
    Eigen::FullPivLU<Mat> lu(umv);
    if (!lu.isInvertible())
        throw std::invalid_argument("gaussian_wavefunction: lambda_p = i sqrt(2) (u-v) singular");
    Mat umv_inv = lu.inverse();
    Mat mu = umv_inv * (u + v);  // equals i lambda_p^-1 lambda_q
    if ((mu - mu.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("gaussian_wavefunction: mu_tilde not symmetric");
    Eigen::SelfAdjointEigenSolver<RMat> re(RMat(mu.real()));
    if (re.eigenvalues().minCoeff() <= 0)
        throw std::domain_error("gaussian_wavefunction: Re(mu_tilde) not positive definite");
    Vec nu = std::sqrt(2.0) * (umv_inv * alpha);

    GaussianWavefunction wf;
    wf.mu_tilde = mu;
    wf.nu_tilde = nu;
    // gamma fixed by requiring the analytic Gaussian norm to be 1:
    //   |N|^2 * integral exp(2Re(nu).q - q.Re(mu).q) = 1 with N = pi^{-N/4} e^gamma
    // norm_drift records any discrepancy on the sampled grid.
    RMat remu = mu.real();
    RVec renu = nu.real();
    double log_det = std::log(re.eigenvalues().prod());
    double quad = renu.dot(remu.inverse() * renu);
    // norm-1 condition: e^{2 Re gamma} det(Re mu)^{-1/2} e^{quad} = 1
    wf.gamma = Cx(0.25 * log_det - 0.5 * quad, 0.0);

    double norm2 = 0.0, cell = 1.0;
    if (grid.size() >= 2) {
        cell = 1.0;
        for (int d = 0; d < N; ++d) {
            // infer step per axis from the first differing samples
            double step = 0.0;
            for (size_t t = 1; t < grid.size(); ++t) {
                double dd = std::abs(grid[t](d) - grid[0](d));
                if (dd > 1e-14) { step = dd; break; }
            }
            if (step > 0) cell *= step;
        }
    }
    for (const auto& qv : grid) {
        Cx expo = wf.gamma;
        for (int d = 0; d < N; ++d) expo += nu(d) * qv(d);
        Cx quadf = 0.0;
        for (int d1 = 0; d1 < N; ++d1)
            for (int d2 = 0; d2 < N; ++d2) quadf += qv(d1) * mu(d1, d2) * qv(d2);
        expo -= 0.5 * quadf;
        Cx amp = std::pow(M_PI, -0.25 * N) * std::exp(expo);
        wf.amplitudes.push_back(amp);
        norm2 += std::norm(amp) * cell;
    }
    wf.norm_drift = std::abs(norm2 - 1.0);
    return wf;
}

// ---------------------------------------------------------------------------
// squared amplitude / even-odd
// ---------------------------------------------------------------------------

RisState squared_amplitude_ris(Cx u, Cx v, Cx z, Parity parity, int D, int max_d) {
    Rational k = (parity == Parity::Even) ? Rational(1, 4) : Rational(3, 4);
    RisState out;
    out.family = RisFamily::SquaredAmplitude;
    // the Fock residual is twice the su(1,1) one, so a sub-solve that just
    // cleared its own threshold may need one more doubling here
    for (int start = std::max(8, D / 2); start <= std::max(8, max_d / 2); start *= 2) {
        // u a^2 + v a†^2 = 2(u K- + v K+) in the parity sector
        RisState su = su11_ris(u, v, 0.0, z / 2.0, k, start, max_d / 2);
        int M = su.state.dim();
        int offset = (parity == Parity::Even) ? 0 : 1;
        Vec fock = Vec::Zero(2 * M);
        for (int m = 0; m < M; ++m) fock(2 * m + offset) = su.state.amplitudes()(m);
        QuantumState st = QuantumState::pure(fock);

        // band action of u a^2 + v a†^2 (a dense product is O(M^3) at the
        // adaptive upper dimensions)
        int D2 = 2 * M;
        const Vec& psi = st.amplitudes();
        Vec res = -z * psi;
        for (int n = 0; n + 2 < D2; ++n) {
            double w2 = std::sqrt((n + 1.0) * (n + 2.0));
            res(n) += u * w2 * psi(n + 2);
            res(n + 2) += v * w2 * psi(n);
        }
        out.residual = res.norm();
        out.tail_mass = st.tail_mass();
        out.state = std::move(st);
        out.converged = out.residual < 1e-8 && out.tail_mass < 1e-6;
        if (out.converged || M >= max_d / 2) break;
        start = std::max(start, M);  // resume above the dimension already tried
    }
    return out;
}

// ---------------------------------------------------------------------------
// squeezed Fock
// ---------------------------------------------------------------------------

RMat single_mode_squeeze_generator(double r) {
    // exp(-iH) with H = (r/2)(pq+qp) squeezes p: the resulting vacuum image
    // has sigma_pp = e^{-2r}/2 and equals the a' = cosh(r) a - sinh(r) a†
    // eigenstate
    RMat B(2, 2);
    B << 0.0, r / 2.0, r / 2.0, 0.0;
    return B;
}

RisState squeezed_fock(const RMat& B, const std::vector<int>& n_fock, int D) {
    int n2 = static_cast<int>(B.rows());
    if (n2 % 2 != 0 || B.cols() != n2)
        throw std::invalid_argument("squeezed_fock: B must be 2N x 2N");
    if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("squeezed_fock: B must be symmetric (hermitian generator)");
    int N = n2 / 2;
    if (static_cast<int>(n_fock.size()) != N)
        throw std::invalid_argument("squeezed_fock: n_fock size must equal N");

    ModeSystem sys;
    for (int i = 0; i < N; ++i) sys.modes.push_back(BasisSpec::fock(D));
    long total = sys.total_dim();
    BosonOps b = build_boson(D);
    std::vector<Mat> Q(2 * N);
    for (int i = 0; i < N; ++i) {
        Q[i] = tensor_embed(b.p, i, sys).m;      // ordering (p..., q...)
        Q[N + i] = tensor_embed(b.q, i, sys).m;
    }
    Mat H = Mat::Zero(total, total);
    for (int mu = 0; mu < 2 * N; ++mu)
        for (int nu = 0; nu < 2 * N; ++nu)
            if (B(mu, nu) != 0.0) H += B(mu, nu) * Q[mu] * Q[nu];
    Mat U = (Cx(0, -1) * H).exp();

    long idx = 0;
    for (int i = 0; i < N; ++i) {
        if (n_fock[i] < 0 || n_fock[i] >= D)
            throw std::invalid_argument("squeezed_fock: Fock index out of range");
        idx = idx * D + n_fock[i];
    }
    Vec psi = U.col(idx);
    QuantumState st = QuantumState::pure(psi);

    RisState out;
    out.family = RisFamily::SqueezedFock;
    // H is exactly hermitian on the truncated space, so U is unitary; report
    // the defect as the residual
    out.residual = (U.adjoint() * U - Mat::Identity(total, total)).cwiseAbs().maxCoeff();
    out.tail_mass = st.tail_mass();
    out.state = std::move(st);
    out.converged = out.residual < 1e-9 && out.tail_mass < 1e-6;
    return out;
}

// ---------------------------------------------------------------------------
// group CS constraint and squeeze maps
// ---------------------------------------------------------------------------

Mat group_cs_constraint(const Mat& u, const Mat& utilde, const Mat& vtilde) {
    Eigen::FullPivLU<Mat> lu(utilde.conjugate());
    if (!lu.isInvertible())
        throw std::invalid_argument("group_cs_constraint: utilde singular");
    return -u * vtilde * lu.inverse();
}

Cx group_cs_constraint(Cx u, Cx utilde, Cx vtilde) {
    if (std::abs(utilde) < 1e-14)
        throw std::invalid_argument("group_cs_constraint: utilde singular");
    return -u * vtilde / std::conj(utilde);
}

RMat bogoliubov_lambda(const Mat& u, const Mat& v) {
    int N = static_cast<int>(u.rows());
    RMat lam(2 * N, 2 * N);
    lam.topLeftCorner(N, N) = (u - v).real();       // p' block
    lam.topRightCorner(N, N) = (u + v).imag();
    lam.bottomLeftCorner(N, N) = -(u - v).imag();   // q' block
    lam.bottomRightCorner(N, N) = (u + v).real();
    return lam;
}

RisState squeeze_map_canonical(const Mat& u, const Mat& v, const QuantumState& base,
                               const Vec& alpha) {
    if (!base.is_pure())
        throw std::invalid_argument("squeeze_map_canonical: pure base state required");
    int N = static_cast<int>(u.rows());
    RMat lam = bogoliubov_lambda(u, v);
    RMat J = symplectic_form(N);
    if ((lam * J * lam.transpose() - J).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument(
            "squeeze_map_canonical: (u,v) is not a Bogoliubov pair (Lambda not symplectic)");
    RMat m = lam.log();
    RMat B = J * m;
    B = 0.5 * (B + B.transpose());

    int total = base.dim();
    // recover per-mode D from the total dimension
    int D = (N == 1) ? total : static_cast<int>(std::lround(std::pow(total, 1.0 / N)));
    ModeSystem sys;
    for (int i = 0; i < N; ++i) sys.modes.push_back(BasisSpec::fock(D));
    BosonOps bops = build_boson(D);
    std::vector<Mat> Q(2 * N), a(N);
    for (int i = 0; i < N; ++i) {
        Q[i] = tensor_embed(bops.p, i, sys).m;
        Q[N + i] = tensor_embed(bops.q, i, sys).m;
        a[i] = tensor_embed(bops.a, i, sys).m;
    }
    Mat H = Mat::Zero(total, total);
    for (int mu = 0; mu < 2 * N; ++mu)
        for (int nu = 0; nu < 2 * N; ++nu)
            if (B(mu, nu) != 0.0) H += 0.5 * B(mu, nu) * Q[mu] * Q[nu];

    // calibrate the exponent sign against the intended Heisenberg action
    auto try_sign = [&](double s) {
        Mat U = (Cx(0, s) * H).exp();
        Vec psi = U * base.amplitudes();
        double res = 0.0;
        for (int jj = 0; jj < N; ++jj) {
            Mat aprime = Mat::Zero(total, total);
            for (int kk = 0; kk < N; ++kk)
                aprime += u(jj, kk) * a[kk] + v(jj, kk) * Mat(a[kk].adjoint());
            res = std::max(res, (aprime * psi - alpha(jj) * psi).norm() / psi.norm());
        }
        return std::make_pair(res, psi);
    };
    auto [res_p, psi_p] = try_sign(+1.0);
    auto [res_m, psi_m] = try_sign(-1.0);
    double res = std::min(res_p, res_m);
    Vec psi = (res_p <= res_m) ? psi_p : psi_m;

    RisState out;
    out.family = RisFamily::CanonicalMultimode;
    out.state = QuantumState::pure(psi);
    out.residual = res;
    out.tail_mass = out.state.tail_mass();
    out.converged = res < 1e-8 && out.tail_mass < 1e-6;
    return out;
}

RisState squeeze_map_canonical(Cx u, Cx v, const QuantumState& base, Cx alpha) {
    Mat um(1, 1), vm(1, 1);
    um(0, 0) = u;
    vm(0, 0) = v;
    Vec al(1);
    al(0) = alpha;
    return squeeze_map_canonical(um, vm, base, al);
}

RisState squeeze_map_su11(Cx u, Cx v, Cx eta, Rational k, int M) {
    // the su(1,1) squeeze operator is isometric only; the map is realized by
    // re-solving the eigenproblem with the base BG eigenvalue
    return su11_ris(u, v, 0.0, eta, k, M);
}

}  // namespace robertson
