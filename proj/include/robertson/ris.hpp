#ifndef ROBERTSON_RIS_HPP
#define ROBERTSON_RIS_HPP

#include "robertson/moments.hpp"

namespace robertson {

enum class RisFamily {
    CanonicalMultimode, Su11, Su2, SquaredAmplitude, EvenOddCS, SqueezedFock, GroupCS
};

struct NonNormalizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExcludedParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RisState {
    QuantumState state{QuantumState::basis_state(2, 0)};
    RisFamily family = RisFamily::Su11;
    double residual = 0.0;
    bool converged = false;
    double tail_mass = 0.0;
    // Su11: flags the hermitian combination v = u*, w real (3-observable RIS,
    // det C = 0 trivially since n is odd)
    bool hermitian_combination = false;
};

// ---- su(1,1) ----------------------------------------------------------------

// Eigenstate of u K- + v K+ + w K3 with eigenvalue z, built by the weight-basis
// three-term recursion from c_0 = 1.  The truncation M doubles until residual
// and tail mass pass, up to max_m.  u = 0 is an unsupported limit.
RisState su11_ris(Cx u, Cx v, Cx w, Cx z, Rational k, int M, int max_m = 1 << 14);

// Normalizability test (either branch of |w -+ sqrt(w^2-4uv)| < 2|u|).
bool su11_normalizable(Cx u, Cx v, Cx w);

// Closed-form sigma of the w = 0 intelligent states:
// sigma11 = |u-v|^2 <K3> / (2(|u|^2-|v|^2)), etc.; det sigma = <K3>^2/4.
UncertaintyPair su11_sigma_closed_form(Cx u, Cx v, double mean_k3);

// ---- su(2) ------------------------------------------------------------------

struct Su2RisResult {
    std::vector<RisState> states;       // ordered m = -j ... +j
    std::vector<Cx> eigenvalues;        // matched to m*b
    Cx b;                               // sqrt(beta . beta), principal branch
};

// All 2j+1 eigenstates of beta . J; eigenvalues quantize to m b.  Only
// b^2 = beta . beta = 0 is excluded (the dense solve needs no other condition).
Su2RisResult su2_ris(const std::array<Cx, 3>& beta, Rational j);

// ---- canonical multimode ----------------------------------------------------

// Simultaneous eigenstate of a'_j = u_jk a_k + v_jk a†_k with eigenvalues
// alpha_j, as a Gaussian exponential of raising operators applied to vacuum.
RisState canonical_ris(const Mat& u, const Mat& v, const Vec& alpha, int D, int max_d = 1 << 9);
RisState canonical_ris(Cx u, Cx v, Cx alpha, int D);  // N = 1 convenience

// Coordinate-representation Gaussian exp(gamma + nu.q - q.mu.q/2) for the
// canonical RIS; each grid entry is an N-vector sample point and one amplitude
// is returned per point (callers build row-major product grids themselves).
struct GaussianWavefunction {
    Mat mu_tilde;      // i lambda_p^-1 lambda_q
    Vec nu_tilde;
    Cx gamma;          // from the closed form; norm drift is reported, not trusted
    std::vector<Cx> amplitudes;
    double norm_drift; // |grid norm - 1| with gamma as given
};
GaussianWavefunction gaussian_wavefunction(const Mat& u, const Mat& v, const Vec& alpha,
                                           const std::vector<RVec>& grid);

// ---- squared amplitude / even-odd -------------------------------------------

enum class Parity { Even, Odd };

// Eigenstate of u a^2 + v a†^2 with eigenvalue z in the chosen parity sector;
// reduces to su11_ris with k = 1/4 (even) or 3/4 (odd) and eigenvalue z/2.
RisState squared_amplitude_ris(Cx u, Cx v, Cx z, Parity parity, int D, int max_d = 1 << 14);

// ---- squeezed Fock ----------------------------------------------------------

// exp(-i B_{mu nu} Q_mu Q_nu) |n>, B real symmetric 2N x 2N, Q = (p..., q...).
RisState squeezed_fock(const RMat& B, const std::vector<int>& n_fock, int D);

// Generator matrix for the single-mode squeeze exp(r(a†^2 - a^2)/2).
RMat single_mode_squeeze_generator(double r);

// ---- group CS / squeeze map -------------------------------------------------

// v solving u vtilde + v utilde* = 0, i.e. v = -u vtilde utilde*^-1.
Mat group_cs_constraint(const Mat& u, const Mat& utilde, const Mat& vtilde);
Cx group_cs_constraint(Cx u, Cx utilde, Cx vtilde);

// Canonical family: metaplectic unitary for the Bogoliubov pair (u, v)
// (requires |u|^2 - |v|^2 = 1 blockwise) applied to the base eigenstate.
RisState squeeze_map_canonical(const Mat& u, const Mat& v, const QuantumState& base,
                               const Vec& alpha);
RisState squeeze_map_canonical(Cx u, Cx v, const QuantumState& base, Cx alpha);

// su(1,1): the squeeze map is realized state-to-state by re-solving the
// eigenproblem (the operator is isometric only, no unitary matrix exists).
RisState squeeze_map_su11(Cx u, Cx v, Cx eta, Rational k, int M);

// Symplectic 2N x 2N matrix of the observable transformation induced by
// a' = u a + v a†, ordering (p..., q...).
RMat bogoliubov_lambda(const Mat& u, const Mat& v);

}  // namespace robertson

#endif
