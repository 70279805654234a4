#include "robertson/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace robertson {

double CongruenceMap::det() const { return Eigen::FullPivLU<RMat>(lambda).determinant(); }

void CongruenceMap::check() const {
    if (lambda.rows() != lambda.cols()) throw std::invalid_argument("CongruenceMap: not square");
    if (std::abs(det()) < 1e-14) throw std::invalid_argument("CongruenceMap: singular Lambda");
    if (tag == CongruenceClass::Orthogonal) {
        double d = (lambda * lambda.transpose() - RMat::Identity(n(), n())).cwiseAbs().maxCoeff();
        if (d > 1e-10) throw std::invalid_argument("CongruenceMap: Lambda not orthogonal");
    } else if (tag == CongruenceClass::Symplectic) {
        if (n() % 2 != 0) throw std::invalid_argument("CongruenceMap: symplectic needs even n");
        RMat j = symplectic_form(n() / 2);
        double d = (lambda * j * lambda.transpose() - j).cwiseAbs().maxCoeff();
        if (d > 1e-10) throw std::invalid_argument("CongruenceMap: Lambda not symplectic");
    }
}

UncertaintyPair transform_sigma(const CongruenceMap& map, const UncertaintyPair& pair) {
    map.check();
    if (map.n() != pair.n) throw std::invalid_argument("transform_sigma: dimension mismatch");
    UncertaintyPair out = pair;
    out.sigma = map.lambda * pair.sigma * map.lambda.transpose();
    out.cmat = map.lambda * pair.cmat * map.lambda.transpose();
    for (auto& l : out.labels) l += "'";
    return out;
}

std::pair<CongruenceMap, UncertaintyPair> orthogonal_diagonalize(const UncertaintyPair& pair) {
    Eigen::SelfAdjointEigenSolver<RMat> es(pair.sigma);
    int n = pair.n;
    // sort eigenvalues descending, tie-break by original index
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return es.eigenvalues()(a) > es.eigenvalues()(b);
    });
    RMat lam(n, n);
    for (int i = 0; i < n; ++i) lam.row(i) = es.eigenvectors().col(idx[i]).transpose();
    CongruenceMap map{lam, CongruenceClass::Orthogonal};
    return {map, transform_sigma(map, pair)};
}

WilliamsonResult williamson_diagonalize(const RMat& sigma) {
    int n = static_cast<int>(sigma.rows());
    if (n % 2 != 0 || sigma.cols() != n)
        throw std::invalid_argument("williamson_diagonalize: even square matrix required");
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("williamson_diagonalize: input not symmetric");
    int N = n / 2;
    Eigen::SelfAdjointEigenSolver<RMat> es(sigma);
    double min_ev = es.eigenvalues().minCoeff();
    if (min_ev <= 1e-10)
        throw std::domain_error("williamson_diagonalize: not positive definite, min eigenvalue " +
                                std::to_string(min_ev));
    RMat shalf = es.eigenvectors() *
                 es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    RMat shalf_inv = es.eigenvectors() *
                     es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                     es.eigenvectors().transpose();
    RMat J = symplectic_form(N);
    RMat K = shalf * J * shalf;  // antisymmetric, invertible

    // real Schur of a skew-symmetric matrix: 2x2 blocks [[0, t],[-t, 0]]
    Eigen::RealSchur<RMat> schur(K);
    RMat Q = schur.matrixU();
    RMat T = schur.matrixT();

    struct Block { double kappa; RVec c1, c2; };
    std::vector<Block> blocks;
    for (int i = 0; i < n;) {
        if (i + 1 < n && std::abs(T(i + 1, i)) > 1e-13) {
            double t = T(i, i + 1);
            RVec c1 = Q.col(i), c2 = Q.col(i + 1);
            if (t < 0) { std::swap(c1, c2); t = -t; }
            blocks.push_back({t, c1, c2});
            i += 2;
        } else {
            // skew-symmetric invertible K cannot have real eigenvalues
            throw std::logic_error("williamson_diagonalize: unexpected 1x1 Schur block");
        }
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const Block& a, const Block& b) { return a.kappa > b.kappa; });

    RMat O(n, n);
    RVec kappa(N);
    for (int j = 0; j < N; ++j) {
        O.col(j) = blocks[j].c1;
        O.col(N + j) = blocks[j].c2;
        kappa(j) = blocks[j].kappa;
    }
    RVec dext(n);
    dext.head(N) = kappa;
    dext.tail(N) = kappa;

    RMat lam = dext.cwiseSqrt().asDiagonal() * O.transpose() * shalf_inv;
    WilliamsonResult res;
    res.map = CongruenceMap{lam, CongruenceClass::Symplectic};
    res.map.check();
    res.diagonal = dext;
    res.pair_products = kappa.cwiseProduct(kappa);
    return res;
}

SpinDecorrelation spin_decorrelate(const std::vector<OperatorMatrix>& spin_triple,
                                   const QuantumState& state) {
    if (spin_triple.size() != 3)
        throw std::invalid_argument("spin_decorrelate: spin triple expected");
    UncertaintyPair pair =
        uncertainty_pair(spin_triple, state, {"J1", "J2", "J3"});
    auto [map, diag] = orthogonal_diagonalize(pair);
    RMat rot = map.lambda;
    if (Eigen::FullPivLU<RMat>(rot).determinant() < 0) {
        rot.row(2) = -rot.row(2);
        diag.cmat.row(2) = -diag.cmat.row(2);
        diag.cmat.col(2) = -diag.cmat.col(2);
    }
    SpinDecorrelation out;
    out.rotation = rot;
    out.diagonal_pair = diag;
    for (int mu = 0; mu < 3; ++mu) {
        Mat jm = Mat::Zero(spin_triple[0].dim(), spin_triple[0].dim());
        for (int nu = 0; nu < 3; ++nu) jm += rot(mu, nu) * spin_triple[nu].m;
        out.rotated_ops.push_back(OperatorMatrix::make(jm, true, spin_triple[0].exact_dim));
    }
    // rotations preserve the spin commutators; fail loudly if they don't
    static const Cx I{0.0, 1.0};
    Mat comm = out.rotated_ops[0].m * out.rotated_ops[1].m -
               out.rotated_ops[1].m * out.rotated_ops[0].m - I * out.rotated_ops[2].m;
    if (comm.cwiseAbs().maxCoeff() > 1e-10)
        throw std::logic_error("spin_decorrelate: rotated commutators violated");
    return out;
}

std::vector<InvariantDrift> invariant_suite(const CongruenceMap& map, const UncertaintyPair& pair) {
    map.check();
    UncertaintyPair tp = transform_sigma(map, pair);
    std::vector<InvariantDrift> out;
    if (std::abs(map.det() - 1.0) < 1e-10 || map.tag != CongruenceClass::General) {
        double d0 = pair.det_sigma(), d1 = tp.det_sigma();
        out.push_back({"det_sigma", std::abs(d1 - d0 * map.det() * map.det())});
    }
    if (map.tag == CongruenceClass::Orthogonal) {
        RMat a0 = RMat::Identity(pair.n, pair.n), a1 = a0;
        for (int k = 1; k <= 3; ++k) {
            a0 = a0 * pair.sigma;
            a1 = a1 * tp.sigma;
            out.push_back({"tr_sigma^" + std::to_string(k),
                           std::abs(a1.trace() - a0.trace())});
        }
    }
    if (map.tag == CongruenceClass::Symplectic) {
        RMat J = symplectic_form(pair.n / 2);
        RMat p0 = pair.sigma * J, p1 = tp.sigma * J;
        RMat a0 = RMat::Identity(pair.n, pair.n), a1 = a0;
        for (int k = 1; k <= 3; ++k) {
            a0 = a0 * p0;
            a1 = a1 * p1;
            out.push_back({"tr(sigmaJ)^" + std::to_string(k),
                           std::abs(a1.trace() - a0.trace())});
        }
    }
    return out;
}

double c0_squared(const UncertaintyPair& pair) {
    if (pair.n % 2 != 0) throw std::invalid_argument("c0_squared: even n required");
    WilliamsonResult w = williamson_diagonalize(pair.sigma);
    RMat cprime = w.map.lambda * pair.cmat * w.map.lambda.transpose();
    int N = pair.n / 2;
    double c0sq = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
        double c = 2.0 * std::abs(cprime(j, N + j));  // |<[X'_j, X'_{N+j}]>|
        c0sq = std::min(c0sq, c * c);
    }
    return c0sq;
}

}  // namespace robertson
