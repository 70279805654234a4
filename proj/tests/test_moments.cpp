#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "robertson/moments.hpp"

using namespace robertson;

namespace {

// deterministic hermitian observables, normalized to unit max-norm so that
// determinant magnitudes stay moderate in the property suites
std::vector<OperatorMatrix> random_observables(int n, int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<OperatorMatrix> out;
    for (int t = 0; t < n; ++t) {
        Mat a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a(i, j) = Cx(g(rng), g(rng));
        Mat h = 0.5 * (a + a.adjoint());
        h /= h.cwiseAbs().maxCoeff();
        out.push_back(OperatorMatrix::make(h, true, dim));
    }
    return out;
}

}  // namespace

TEST_CASE("canonical vacuum pair and trace UR") {
    BosonOps b = build_boson(40);
    QuantumState vac = QuantumState::basis_state(40, 0);
    auto pair = uncertainty_pair({b.p, b.q}, vac, {"p", "q"});
    CHECK(pair.sigma(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pair.sigma(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(pair.sigma(0, 1)) < 1e-12);
    // ordering (p, q): C_12 = -(i/2)<[p,q]> = -1/2
    CHECK(pair.cmat(0, 1) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK_FALSE(pair.truncation_warning);

    auto rep = inequality_report(pair, {1, 2, 3});
    CHECK(std::abs(rep.robertson_gap) < 1e-12);
    CHECK(rep.robertson_minimized);
    CHECK(rep.product_minimized);
    REQUIRE(rep.trace_ur.size() == 3);
    // Tr(i sigma J)^2 = 2 det sigma = 1/2 = N/2^{2k-1} at k=1
    CHECK(rep.trace_ur[0].lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.trace_ur[0].rhs == doctest::Approx(0.5).epsilon(1e-12));
    for (const auto& e : rep.trace_ur) CHECK(std::abs(e.gap) < 1e-12);
    CHECK(robertson_minimized(pair));
}

TEST_CASE("su(1,1) lowest weight variances") {
    for (Rational k : {Rational(1, 4), Rational(3, 4), Rational(1, 2), Rational(2, 1)}) {
        Su11Ops ops = build_su11(k, 32);
        QuantumState low = QuantumState::basis_state(32, 0);
        auto pair = uncertainty_pair({ops.k1, ops.k2}, low, {"K1", "K2"});
        double kv = k.value();
        CHECK(pair.sigma(0, 0) == doctest::Approx(kv / 2).epsilon(1e-12));
        CHECK(pair.sigma(1, 1) == doctest::Approx(kv / 2).epsilon(1e-12));
        CHECK(std::abs(pair.sigma(0, 1)) < 1e-12);
        CHECK(pair.det_c() == doctest::Approx(kv * kv / 4).epsilon(1e-12));
        // lowest weight is a group CS: Robertson-minimizing
        CHECK(robertson_minimized(pair));
    }
}

TEST_CASE("spin eigenstates: Proposition 1 direction (a)") {
    for (Rational j : {Rational(1, 1), Rational(3, 2)}) {
        SpinOps s = build_spin(j);
        int dim = s.j1.dim();
        QuantumState top = QuantumState::basis_state(dim, dim - 1);  // |j, m=j>
        auto pair = uncertainty_pair({s.j1, s.j2, s.j3}, top, {"J1", "J2", "J3"});
        CHECK(std::abs(pair.det_sigma()) < 1e-12);
        CHECK(std::abs(pair.det_c()) < 1e-12);  // odd n
    }
}

TEST_CASE("Fock |1> gap") {
    BosonOps b = build_boson(40);
    QuantumState one = QuantumState::basis_state(40, 1);
    auto pair = uncertainty_pair({b.q, b.p}, one, {"q", "p"});
    CHECK(pair.det_sigma() == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(pair.det_c() == doctest::Approx(0.25).epsilon(1e-12));
    auto rep = inequality_report(pair);
    CHECK(rep.robertson_gap == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(robertson_minimized(pair));
}

TEST_CASE("inequality_report contract errors") {
    SpinOps s = build_spin(Rational(1, 1));
    QuantumState st = QuantumState::basis_state(3, 0);
    auto pair = uncertainty_pair({s.j1, s.j2, s.j3}, st);
    CHECK_THROWS_AS(inequality_report(pair, {1}), std::invalid_argument);

    BosonOps b = build_boson(8);
    OperatorMatrix bad = b.a;  // not hermitian
    CHECK_THROWS_AS(uncertainty_pair({bad, b.q}, QuantumState::basis_state(8, 0)),
                    std::invalid_argument);
}

TEST_CASE("detc_factorized") {
    BosonOps b = build_boson(40);
    QuantumState vac = QuantumState::basis_state(40, 0);
    CHECK(detc_factorized({b.p, b.q}, vac) == doctest::Approx(0.25).epsilon(1e-12));

    SUBCASE("k=2 quadratures match direct 2x2 determinant") {
        auto xy = build_power_quadratures(2, 50);
        QuantumState v50 = QuantumState::basis_state(50, 0);
        double fac = detc_factorized({xy.x, xy.y}, v50);
        CHECK(fac == doctest::Approx(0.25).epsilon(1e-12));
        auto pair = uncertainty_pair({xy.x, xy.y}, v50);
        CHECK(fac == doctest::Approx(pair.det_c()).epsilon(1e-8));
    }

    SUBCASE("two-mode coherent state gives 1/16") {
        int D = 18;
        ModeSystem sys;
        sys.modes = {BasisSpec::fock(D), BasisSpec::fock(D)};
        BosonOps bm = build_boson(D);
        auto p1 = tensor_embed(bm.p, 0, sys), p2 = tensor_embed(bm.p, 1, sys);
        auto q1 = tensor_embed(bm.q, 0, sys), q2 = tensor_embed(bm.q, 1, sys);
        Vec c1 = coherent_state(Cx(0.4, 0.2), D).amplitudes();
        Vec c2 = coherent_state(Cx(-0.3, 0.5), D).amplitudes();
        Vec psi(D * D);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) psi(i * D + j) = c1(i) * c2(j);
        QuantumState st = QuantumState::pure(psi);
        double fac = detc_factorized({p1, p2, q1, q2}, st);
        CHECK(fac == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
        auto pair = uncertainty_pair({p1, p2, q1, q2}, st);
        CHECK(fac == doctest::Approx(pair.det_c()).epsilon(1e-8));
    }

    SUBCASE("pairing violation throws") {
        // (q, p, p, q): [X_1, X_2] = [q, p] = i != 0
        CHECK_THROWS_AS(detc_factorized({b.q, b.p, b.p, b.q}, vac), std::invalid_argument);
    }
}

TEST_CASE("oracle sanity: reproducibility and mixed-state validity") {
    auto s1 = oracle::random_state(64, oracle::StateKind::Pure, 7);
    auto s2 = oracle::random_state(64, oracle::StateKind::Pure, 7);
    CHECK((s1.amplitudes() - s2.amplitudes()).norm() == 0.0);
    CHECK(s1.tail_mass() < 1e-6);  // e^{-n/8} damping certifies the tail at dim 64

    auto m = oracle::random_state(32, oracle::StateKind::Mixed, 11);
    Mat rho = m.density();
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("randomized property suite: gaps, parity, positivity, brute oracle") {
    auto seeds = oracle::load_seed_manifest(ROBERTSON_SEED_MANIFEST);
    REQUIRE(seeds.size() >= 64);
    const int dim = 16;
    long states_checked = 0;
    int brute_checked = 0;
    for (unsigned seed : seeds) {
        int sub = 0;
        for (int n : {2, 3, 4, 6}) {
            auto ops = random_observables(n, dim, seed * 977u + n);
            for (auto kind : {oracle::StateKind::Pure, oracle::StateKind::Mixed,
                              oracle::StateKind::GaussianLike, oracle::StateKind::Pure}) {
                QuantumState st = oracle::random_state(dim, kind, seed * 131u + 17u * sub);
                ++sub;
                auto pair = uncertainty_pair(ops, st);
                auto rep = inequality_report(pair);
                CHECK(rep.robertson_gap >= -1e-8);
                CHECK(rep.product_gap >= -1e-8);
                CHECK(rep.heisenberg_gap >= -1e-8);
                if (n % 2 == 1) CHECK(std::abs(pair.det_c()) < 1e-12);
                CHECK(pair.det_c() >= -1e-10);
                Eigen::SelfAdjointEigenSolver<RMat> es(pair.sigma, Eigen::EigenvaluesOnly);
                CHECK(es.eigenvalues().minCoeff() >= -1e-10);
                if (n == 2)
                    CHECK(trace_ur_lhs(pair.sigma, 1) ==
                          doctest::Approx(2.0 * pair.det_sigma()).epsilon(1e-12));
                ++states_checked;
            }
            if (n == 6 && brute_checked < 16) {
                QuantumState st = oracle::random_state(dim, oracle::StateKind::Pure, seed);
                auto pair = uncertainty_pair(ops, st);
                std::vector<Mat> raw;
                for (const auto& o : ops) raw.push_back(o.m);
                auto brute = oracle::brute_sigma(raw, st);
                CHECK((pair.sigma - brute.sigma).cwiseAbs().maxCoeff() < 1e-12);
                CHECK((pair.cmat - brute.cmat).cwiseAbs().maxCoeff() < 1e-12);
                ++brute_checked;
            }
        }
    }
    CHECK(states_checked >= 1000);
}

TEST_CASE("Proposition 2 positivity: power-k and q-deformed quadratures") {
    auto seeds = oracle::load_seed_manifest(ROBERTSON_SEED_MANIFEST);
    const int D = 64;
    auto check_positive = [&](const std::vector<OperatorMatrix>& ops, int nstates,
                              unsigned salt) {
        for (int t = 0; t < nstates; ++t) {
            auto kind = (t % 3 == 0) ? oracle::StateKind::GaussianLike : oracle::StateKind::Pure;
            QuantumState st = oracle::random_state(D, kind, seeds[t % seeds.size()] + salt + t);
            auto pair = uncertainty_pair(ops, st);
            Eigen::SelfAdjointEigenSolver<RMat> es(pair.sigma, Eigen::EigenvaluesOnly);
            CHECK(es.eigenvalues().minCoeff() > 0.0);
        }
    };
    for (int k : {1, 2, 3}) {
        auto xy = build_power_quadratures(k, D);
        check_positive({xy.x, xy.y}, 30, 1000u * k);
    }
    for (double q : {0.5, 1.0, 2.0}) {
        QDeformedOps ops = build_qdeformed(q, D);
        Mat x = (ops.a_q.m + ops.adag_q.m) / std::sqrt(2.0);
        Mat y = -Cx(0, 1) * (ops.a_q.m - ops.adag_q.m) / std::sqrt(2.0);
        std::vector<OperatorMatrix> quads{OperatorMatrix::make(x, true, D - 1),
                                          OperatorMatrix::make(y, true, D - 1)};
        check_positive(quads, 30, static_cast<unsigned>(q * 4096));
    }
}
