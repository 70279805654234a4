#include "robertson/algebra.hpp"

#include <cmath>

namespace robertson {

static const Cx I{0.0, 1.0};

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        // accept "0.25", "0.5", "0.75", "1.5" style decimals on a best-effort basis
        double v = std::stod(s);
        long num4 = std::lround(v * 4);
        if (std::abs(num4 / 4.0 - v) > 1e-12)
            throw std::invalid_argument("Rational::parse: not a quarter-integer: " + s);
        return Rational(num4, 4);
    }
    long n = std::stol(s.substr(0, slash));
    long d = std::stol(s.substr(slash + 1));
    return Rational(n, d);
}

BosonOps build_boson(int D) {
    if (D < 2) throw std::invalid_argument("build_boson: D >= 2 required");
    Mat a = Mat::Zero(D, D);
    for (int n = 1; n < D; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    Mat adag = a.adjoint();
    Mat q = (a + adag) / std::sqrt(2.0);
    Mat p = -I * (a - adag) / std::sqrt(2.0);
    return BosonOps{
        OperatorMatrix::make(a, false, D - 1),
        OperatorMatrix::make(adag, false, D - 1),
        OperatorMatrix::make(q, true, D - 1),
        OperatorMatrix::make(p, true, D - 1),
    };
}

QuadraturePair build_power_quadratures(int k, int D) {
    if (k < 1) throw std::invalid_argument("build_power_quadratures: k >= 1 required");
    if (D < k + 1) throw std::invalid_argument("build_power_quadratures: D >= k+1 required");
    BosonOps b = build_boson(D);
    Mat ak = Mat::Identity(D, D);
    for (int i = 0; i < k; ++i) ak = ak * b.a.m;
    Mat akd = ak.adjoint();
    double s = std::sqrt(2.0 * k);
    Mat x = (ak + akd) / s;
    Mat y = -I * (ak - akd) / s;
    return QuadraturePair{
        OperatorMatrix::make(x, true, D - k),
        OperatorMatrix::make(y, true, D - k),
    };
}

double q_bracket(double q_param, long n) {
    if (q_param <= 0.0) throw std::domain_error("q_bracket: q_param > 0 required");
    if (std::abs(q_param - 1.0) < 1e-12) return static_cast<double>(n);
    double qn = std::pow(q_param, static_cast<double>(n));
    return (qn - 1.0 / qn) / (q_param - 1.0 / q_param);
}

QDeformedOps build_qdeformed(double q_param, int D) {
    if (q_param <= 0.0) throw std::domain_error("build_qdeformed: q_param > 0 required");
    if (D < 2) throw std::invalid_argument("build_qdeformed: D >= 2 required");
    Mat a = Mat::Zero(D, D);
    for (int n = 1; n < D; ++n) a(n - 1, n) = std::sqrt(q_bracket(q_param, n));
    Mat nq = Mat::Zero(D, D);
    for (int n = 0; n < D; ++n) nq(n, n) = static_cast<double>(n);
    return QDeformedOps{
        OperatorMatrix::make(a, false, D - 1),
        OperatorMatrix::make(a.adjoint(), false, D - 1),
        OperatorMatrix::make(nq, true, D),
    };
}

Su11Ops build_su11(Rational k, int M) {
    if (!admissible_bargmann(k)) throw std::domain_error("build_su11: inadmissible Bargmann index");
    if (M < 2) throw std::invalid_argument("build_su11: M >= 2 required");
    double kv = k.value();
    Mat km = Mat::Zero(M, M);
    Mat k3 = Mat::Zero(M, M);
    for (int m = 1; m < M; ++m) km(m - 1, m) = std::sqrt(m * (m + 2.0 * kv - 1.0));
    for (int m = 0; m < M; ++m) k3(m, m) = m + kv;
    Mat kp = km.adjoint();
    Mat k1 = (kp + km) / 2.0;
    Mat k2 = (kp - km) / (2.0 * I);
    return Su11Ops{
        OperatorMatrix::make(km, false, M - 1),
        OperatorMatrix::make(kp, false, M - 1),
        OperatorMatrix::make(k3, true, M),
        OperatorMatrix::make(k1, true, M - 1),
        OperatorMatrix::make(k2, true, M - 1),
    };
}

SpinOps build_spin(Rational j) {
    if (!(j.den == 1 || j.den == 2) || j.num < 1)
        throw std::invalid_argument("build_spin: j must be a positive half-integer");
    double jv = j.value();
    int dim = static_cast<int>(2 * jv + 1.5);
    // basis ordered m = -j ... +j
    Mat jp = Mat::Zero(dim, dim);
    Mat j3 = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        double m = -jv + i;
        j3(i, i) = m;
        if (i + 1 < dim) jp(i + 1, i) = std::sqrt(jv * (jv + 1) - m * (m + 1));
    }
    Mat jm = jp.adjoint();
    Mat j1 = (jp + jm) / 2.0;
    Mat j2 = (jp - jm) / (2.0 * I);
    return SpinOps{
        OperatorMatrix::make(j1, true, dim),
        OperatorMatrix::make(j2, true, dim),
        OperatorMatrix::make(j3, true, dim),
    };
}

OperatorMatrix tensor_embed(const OperatorMatrix& op, int mode, const ModeSystem& system) {
    if (mode < 0 || mode >= static_cast<int>(system.modes.size()))
        throw std::invalid_argument("tensor_embed: mode index out of range");
    if (op.dim() != system.modes[mode].dim())
        throw std::invalid_argument("tensor_embed: operator dim does not match mode basis");
    // row-major ordering over the mode list: mode 0 is the slowest index
    long left = 1, right = 1;
    for (int i = 0; i < mode; ++i) left *= system.modes[i].dim();
    for (int i = mode + 1; i < static_cast<int>(system.modes.size()); ++i)
        right *= system.modes[i].dim();
    long d = op.dim();
    long total = left * d * right;
    Mat out = Mat::Zero(total, total);
    for (long l = 0; l < left; ++l)
        for (long r = 0; r < right; ++r)
            for (long i = 0; i < d; ++i)
                for (long jj = 0; jj < d; ++jj) {
                    if (op.m(i, jj) == Cx(0.0)) continue;
                    out((l * d + i) * right + r, (l * d + jj) * right + r) = op.m(i, jj);
                }
    long exact = left * std::min<long>(op.exact_dim, d) * right;
    return OperatorMatrix{std::move(out), op.hermitian, static_cast<int>(exact)};
}

SpNOps build_spN_generators(int N, int D) {
    if (N < 1) throw std::invalid_argument("build_spN_generators: N >= 1 required");
    BosonOps b = build_boson(D);
    ModeSystem sys;
    for (int i = 0; i < N; ++i) sys.modes.push_back(BasisSpec::fock(D));
    std::vector<Mat> a(N), ad(N);
    for (int i = 0; i < N; ++i) {
        a[i] = tensor_embed(b.a, i, sys).m;
        ad[i] = a[i].adjoint();
    }
    SpNOps out;
    out.n_modes = N;
    long total = sys.total_dim();
    (void)total;
    for (int j = 0; j < N; ++j)
        for (int k = j; k < N; ++k) {
            out.index.emplace_back(j, k);
            Mat low = 0.5 * a[j] * a[k];
            Mat k3 = 0.25 * (ad[j] * a[k] + ad[k] * a[j]);
            // a prefix subspace can only bound the slowest mode, so a certified
            // exact prefix exists just for the single-mode case
            int exact = (N == 1) ? D - 2 : 0;
            out.lowering.push_back(OperatorMatrix{low, false, exact});
            out.raising.push_back(OperatorMatrix{Mat(low.adjoint()), false, exact});
            out.k3.push_back(OperatorMatrix{k3, true, exact});
        }
    return out;
}

Cx expectation(const Mat& op, const QuantumState& state) {
    if (op.rows() != state.dim()) throw std::invalid_argument("expectation: dimension mismatch");
    if (state.is_pure()) {
        const Vec& v = state.amplitudes();
        return v.dot(op * v);  // Eigen dot conjugates the left factor
    }
    return (state.density() * op).trace();
}

Cx expectation(const OperatorMatrix& op, const QuantumState& state) {
    Cx e = expectation(op.m, state);
    if (op.hermitian && std::abs(e.imag()) > 1e-10)
        throw std::logic_error("expectation: hermitian operator gave complex mean");
    return e;
}

QuantumState coherent_state(Cx alpha, int D) {
    Vec v(D);
    Cx amp = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < D; ++n) {
        v(n) = amp;
        amp *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return QuantumState::pure(std::move(v));
}

QuantumState su2_coherent_state(Cx zeta, Rational j) {
    double jv = j.value();
    int dim = static_cast<int>(2 * jv + 1.5);
    Vec v(dim);
    Cx term = 1.0;  // sqrt(C(2j,n)) zeta^n accumulated
    for (int n = 0; n < dim; ++n) {
        v(n) = term;
        double c = (2 * jv - n) / (n + 1.0);
        term *= zeta * std::sqrt(c > 0 ? c : 0.0);
    }
    return QuantumState::pure(std::move(v));
}

QuantumState su11_group_cs(Cx tau, Rational k, int M) {
    if (std::abs(tau) >= 1.0) throw std::domain_error("su11_group_cs: |tau| < 1 required");
    double kv = k.value();
    Vec v(M);
    Cx term = 1.0;  // tau^m sqrt((2k)_m / m!)
    for (int m = 0; m < M; ++m) {
        v(m) = term;
        term *= tau * std::sqrt((2.0 * kv + m) / (m + 1.0));
    }
    return QuantumState::pure(std::move(v));
}

QuantumState barut_girardello_cs(Cx eta, Rational k, int M) {
    double kv = k.value();
    Vec v(M);
    Cx term = 1.0;  // eta^m sqrt(Gamma(2k) / (m! Gamma(m+2k)))
    for (int m = 0; m < M; ++m) {
        v(m) = term;
        term *= eta / std::sqrt((m + 1.0) * (m + 2.0 * kv));
    }
    return QuantumState::pure(std::move(v));
}

}  // namespace robertson
