#ifndef ROBERTSON_ALGEBRA_HPP
#define ROBERTSON_ALGEBRA_HPP

#include "robertson/types.hpp"

namespace robertson {

struct BosonOps {
    OperatorMatrix a, adag, q, p;
};

struct QuadraturePair {
    OperatorMatrix x, y;
};

struct QDeformedOps {
    OperatorMatrix a_q, adag_q, n_q;
};

struct Su11Ops {
    OperatorMatrix kminus, kplus, k3;
    OperatorMatrix k1, k2;  // (K+ + K-)/2 and (K+ - K-)/(2i), hermitian
};

struct SpinOps {
    OperatorMatrix j1, j2, j3;
};

// sp(N,R) generators on an N-mode tensor space: lowering K_{jk} = a_j a_k / 2
// (j <= k), their adjoints, and hermitian K3_{jk} = (a†_j a_k + a†_k a_j)/4.
struct SpNOps {
    int n_modes;
    std::vector<std::pair<int, int>> index;  // (j,k), j <= k, pair order of the lists below
    std::vector<OperatorMatrix> lowering;
    std::vector<OperatorMatrix> raising;
    std::vector<OperatorMatrix> k3;
};

// Ladder + quadratures on a D-truncated Fock basis, a = (q+ip)/sqrt(2), hbar = 1.
BosonOps build_boson(int D);

// Quadratures of a^k per X = (a^k + a†^k)/sqrt(2k), Y = -i(a^k - a†^k)/sqrt(2k).
QuadraturePair build_power_quadratures(int k, int D);

// q-deformed ladder operators, [n] = (q^n - q^-n)/(q - q^-1); q = 1 is the
// analytic limit [n] = n.
QDeformedOps build_qdeformed(double q_param, int D);
double q_bracket(double q_param, long n);

// su(1,1) discrete-series weight basis: K3|m> = (m+k)|m>,
// K-|m> = sqrt(m(m+2k-1))|m-1>, K+|m> = sqrt((m+1)(m+2k))|m+1>.
Su11Ops build_su11(Rational k, int M);

// Spin-j matrices with the standard ladder action, dimension 2j+1.
SpinOps build_spin(Rational j);

SpNOps build_spN_generators(int N, int D);

// Identity on all other modes; mode 0 is the slowest tensor index.
OperatorMatrix tensor_embed(const OperatorMatrix& op, int mode, const ModeSystem& system);

Cx expectation(const OperatorMatrix& op, const QuantumState& state);
Cx expectation(const Mat& op, const QuantumState& state);

// Truncated Glauber coherent state, amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
QuantumState coherent_state(Cx alpha, int D);

// SU(2) coherent state |zeta;j> = (1+|zeta|^2)^-j sum_n sqrt(C(2j,n)) zeta^n |j,-j+n>.
QuantumState su2_coherent_state(Cx zeta, Rational j);

// SU(1,1) group CS |tau;k> (squeezed vacuum for k=1/4): amplitudes
// proportional to tau^m sqrt((2k)_m / m!), |tau| < 1.
QuantumState su11_group_cs(Cx tau, Rational k, int M);

// Barut-Girardello CS: K-|eta;k> = eta|eta;k>.
QuantumState barut_girardello_cs(Cx eta, Rational k, int M);

}  // namespace robertson

#endif
