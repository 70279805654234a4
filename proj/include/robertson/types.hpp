#ifndef ROBERTSON_TYPES_HPP
#define ROBERTSON_TYPES_HPP

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace robertson {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

constexpr double kHermTol = 1e-12;
constexpr double kNormTol = 1e-10;

// Exact rational, used for the Bargmann index k (it enters three-term
// recursions where float drift compounds).
struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    static Rational parse(const std::string& s);
};

// Admissible Bargmann indices: 1/4, 3/4 and the discrete series n/2, n >= 1.
inline bool admissible_bargmann(const Rational& k) {
    if (k.den == 4 && (k.num == 1 || k.num == 3)) return true;
    if (k.den == 1 && k.num >= 1) return true;
    if (k.den == 2 && k.num >= 1) return true;
    return false;
}

enum class BasisKind { Fock, Su11Discrete, Spin };

struct BasisSpec {
    BasisKind kind = BasisKind::Fock;
    int truncation_dim = 0;        // Fock / Su11; Spin derives 2j+1
    Rational bargmann_k{1, 2};     // Su11 only
    Rational spin_j{1, 2};         // Spin only (half-integer)

    static BasisSpec fock(int dim) {
        if (dim < 2) throw std::invalid_argument("BasisSpec: truncation_dim >= 2 required");
        BasisSpec b; b.kind = BasisKind::Fock; b.truncation_dim = dim; return b;
    }
    static BasisSpec su11(Rational k, int dim) {
        if (dim < 2) throw std::invalid_argument("BasisSpec: truncation_dim >= 2 required");
        if (!admissible_bargmann(k)) throw std::domain_error("BasisSpec: inadmissible Bargmann index");
        BasisSpec b; b.kind = BasisKind::Su11Discrete; b.truncation_dim = dim; b.bargmann_k = k;
        return b;
    }
    static BasisSpec spin(Rational j) {
        if (!(j.den == 1 || j.den == 2) || j.num < 1)
            throw std::invalid_argument("BasisSpec: spin_j must be a positive half-integer");
        BasisSpec b; b.kind = BasisKind::Spin; b.spin_j = j;
        b.truncation_dim = static_cast<int>(2 * j.value() + 1.5);
        return b;
    }
    int dim() const { return truncation_dim; }
};

// Dense operator on a truncated basis. `exact_dim` records the sub-dimension
// on which the defining operator identities are unaffected by truncation.
struct OperatorMatrix {
    Mat m;
    bool hermitian = false;
    int exact_dim = 0;

    int dim() const { return static_cast<int>(m.rows()); }

    double antihermitian_residual() const {
        return (m - m.adjoint()).cwiseAbs().maxCoeff();
    }

    void check() const {
        if (m.rows() != m.cols()) throw std::invalid_argument("OperatorMatrix: not square");
        if (hermitian && antihermitian_residual() >= kHermTol)
            throw std::logic_error("OperatorMatrix: hermitian flag violated");
    }

    static OperatorMatrix make(Mat mat, bool herm, int exact) {
        OperatorMatrix op{std::move(mat), herm, exact};
        op.check();
        return op;
    }
};

// Pure (amplitude vector) or mixed (density matrix) state on the truncated basis.
class QuantumState {
  public:
    static QuantumState pure(Vec amps) {
        double n = amps.norm();
        if (std::abs(n - 1.0) > kNormTol) {
            if (n <= 0.0) throw std::invalid_argument("QuantumState: zero vector");
            amps /= n;
        }
        QuantumState s;
        s.pure_ = true;
        s.amps_ = std::move(amps);
        return s;
    }

    static QuantumState mixed(Mat rho) {
        if (rho.rows() != rho.cols()) throw std::invalid_argument("QuantumState: rho not square");
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("QuantumState: rho not hermitian");
        Cx tr = rho.trace();
        if (std::abs(tr - 1.0) > kNormTol) rho /= tr;
        Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw std::invalid_argument("QuantumState: rho has negative eigenvalue");
        QuantumState s;
        s.pure_ = false;
        s.rho_ = std::move(rho);
        return s;
    }

    static QuantumState basis_state(int dim, int n) {
        Vec v = Vec::Zero(dim);
        v(n) = 1.0;
        return pure(std::move(v));
    }

    bool is_pure() const { return pure_; }
    int dim() const { return pure_ ? static_cast<int>(amps_.size()) : static_cast<int>(rho_.rows()); }
    const Vec& amplitudes() const {
        if (!pure_) throw std::logic_error("QuantumState: mixed state has no amplitude vector");
        return amps_;
    }
    Mat density() const { return pure_ ? Mat(amps_ * amps_.adjoint()) : rho_; }

    // Probability weight in the top 10% of basis indices (truncation diagnostic).
    double tail_mass() const {
        int d = dim();
        int start = d - std::max(1, d / 10);
        double w = 0.0;
        if (pure_) {
            for (int i = start; i < d; ++i) w += std::norm(amps_(i));
        } else {
            for (int i = start; i < d; ++i) w += rho_(i, i).real();
        }
        return w;
    }

  private:
    bool pure_ = true;
    Vec amps_;
    Mat rho_;
};

struct ModeSystem {
    std::vector<BasisSpec> modes;

    long total_dim() const {
        long d = 1;
        for (const auto& b : modes) d *= b.dim();
        return d;
    }
};

}  // namespace robertson

#endif
