#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "robertson/algebra.hpp"

using namespace robertson;
namespace orc = robertson::oracle;

static const Cx I{0.0, 1.0};

TEST_CASE("boson ladder matrix elements") {
    BosonOps b = build_boson(3);
    CHECK(b.a.m(0, 1).real() == doctest::Approx(1.0));
    CHECK(b.a.m(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(b.a.m(0, 2)) == 0.0);
    CHECK(std::abs(b.a.m(1, 0)) == 0.0);
    CHECK_THROWS_AS(build_boson(1), std::invalid_argument);
}

TEST_CASE("canonical commutator on vacuum and at the truncation edge") {
    int D = 40;
    BosonOps b = build_boson(D);
    Mat comm = b.q.m * b.p.m - b.p.m * b.q.m;
    QuantumState vac = QuantumState::basis_state(D, 0);
    CHECK(std::abs(expectation(comm, vac) - I) < 1e-12);
    // truncation corrupts only the last diagonal entry: [q,p](D-1,D-1) = i(1-D)
    CHECK(std::abs(comm(D - 1, D - 1) - I * (1.0 - D)) < 1e-10);
    for (int n = 0; n < D - 1; ++n)
        CHECK(std::abs(comm(n, n) - I) < 1e-12);
}

TEST_CASE("power quadratures") {
    SUBCASE("k=1 reduces to q,p") {
        int D = 20;
        BosonOps b = build_boson(D);
        QuadraturePair xy = build_power_quadratures(1, D);
        CHECK((xy.x.m - b.q.m).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((xy.y.m - b.p.m).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("k=2 commutator on vacuum") {
        int D = 50;
        QuadraturePair xy = build_power_quadratures(2, D);
        Mat comm = -I * (xy.x.m * xy.y.m - xy.y.m * xy.x.m);
        QuantumState vac = QuantumState::basis_state(D, 0);
        // <0| (1/2)[a^2,a†^2] |0> = 1
        CHECK(std::abs(expectation(comm, vac) - Cx(1.0)) < 1e-12);
    }
    SUBCASE("-i[X,Y] positive definite on the low-lying 80% of the basis") {
        int D = 50;
        QuadraturePair xy = build_power_quadratures(2, D);
        Mat comm = -I * (xy.x.m * xy.y.m - xy.y.m * xy.x.m);
        int sub = (D * 8) / 10;
        Eigen::SelfAdjointEigenSolver<Mat> es(comm.topLeftCorner(sub, sub));
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("q-deformed oscillator") {
    SUBCASE("q=1 is the undeformed limit") {
        QDeformedOps d = build_qdeformed(1.0, 10);
        BosonOps b = build_boson(10);
        CHECK((d.a_q.m - b.a.m).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("bracket value by hand: [2] at q=2 is 2.5") {
        CHECK(q_bracket(2.0, 2) == doctest::Approx(2.5));
        QDeformedOps d = build_qdeformed(2.0, 5);
        CHECK(d.a_q.m(1, 2).real() == doctest::Approx(std::sqrt(2.5)));
    }
    SUBCASE("commutator positivity below the edge for q=0.5") {
        int D = 20;
        QDeformedOps d = build_qdeformed(0.5, D);
        Mat comm = d.a_q.m * d.adag_q.m - d.adag_q.m * d.a_q.m;
        for (int n = 0; n < D - 1; ++n) CHECK(comm(n, n).real() > 0.0);
    }
    SUBCASE("continuity at q -> 1") {
        BosonOps b = build_boson(30);
        double d_plus = (build_qdeformed(1.0 + 1e-6, 30).a_q.m - b.a.m).cwiseAbs().maxCoeff();
        double d_minus = (build_qdeformed(1.0 - 1e-6, 30).a_q.m - b.a.m).cwiseAbs().maxCoeff();
        CHECK(d_plus < 1e-4);
        CHECK(d_minus < 1e-4);
    }
    CHECK_THROWS_AS(build_qdeformed(-1.0, 10), std::domain_error);
}

TEST_CASE("su(1,1) weight basis") {
    SUBCASE("lowest weight <0|K3|0> = k") {
        for (auto k : {Rational(1, 4), Rational(3, 4), Rational(1, 2), Rational(2, 1)}) {
            Su11Ops s = build_su11(k, 10);
            CHECK(s.k3.m(0, 0).real() == doctest::Approx(k.value()));
        }
    }
    SUBCASE("K- amplitude at k=1, m=3 is 2 sqrt(3)") {
        Su11Ops s = build_su11(Rational(1, 1), 10);
        CHECK(s.kminus.m(2, 3).real() == doctest::Approx(2.0 * std::sqrt(3.0)));
    }
    SUBCASE("commutators hold below the truncation edge") {
        Su11Ops s = build_su11(Rational(1, 2), 30);
        Mat c12 = s.k1.m * s.k2.m - s.k2.m * s.k1.m + I * s.k3.m;  // [K1,K2] = -iK3
        CHECK(c12.topLeftCorner(28, 28).cwiseAbs().maxCoeff() < 1e-12);
        Mat c23 = s.k2.m * s.k3.m - s.k3.m * s.k2.m - I * s.k1.m;
        CHECK(c23.topLeftCorner(28, 28).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("k=1/4 and 3/4 match the even/odd restriction of a^2/2, a†^2/2, (2a†a+1)/4") {
        int M = 60;
        BosonOps b = build_boson(2 * M);
        Mat km_f = 0.5 * b.a.m * b.a.m;
        Mat k3_f = 0.25 * (2.0 * b.adag.m * b.a.m + Mat::Identity(2 * M, 2 * M));
        for (int parity = 0; parity < 2; ++parity) {
            Su11Ops s = build_su11(parity == 0 ? Rational(1, 4) : Rational(3, 4), M);
            for (int m = 1; m < M; ++m) {
                int fi = 2 * (m - 1) + parity, fj = 2 * m + parity;
                CHECK(std::abs(s.kminus.m(m - 1, m) - km_f(fi, fj)) < 1e-12);
            }
            for (int m = 0; m < M; ++m) {
                int fi = 2 * m + parity;
                CHECK(std::abs(s.k3.m(m, m) - k3_f(fi, fi)) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(build_su11(Rational(1, 3), 10), std::domain_error);
}

TEST_CASE("spin matrices") {
    SUBCASE("j=1/2 gives half the Pauli matrices") {
        SpinOps s = build_spin(Rational(1, 2));
        CHECK(std::abs(s.j1.m(0, 1) - Cx(0.5)) < 1e-14);
        CHECK(std::abs(s.j3.m(0, 0) - Cx(-0.5)) < 1e-14);
        CHECK(std::abs(s.j3.m(1, 1) - Cx(0.5)) < 1e-14);
    }
    SUBCASE("j=1 eigenvalues of J3") {
        SpinOps s = build_spin(Rational(1, 1));
        Eigen::SelfAdjointEigenSolver<Mat> es(s.j3.m);
        CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
        CHECK(es.eigenvalues()(1) == doctest::Approx(0.0));
        CHECK(es.eigenvalues()(2) == doctest::Approx(1.0));
    }
    SUBCASE("j=3/2 isotropic Casimir trace") {
        SpinOps s = build_spin(Rational(3, 2));
        for (const auto* op : {&s.j1, &s.j2, &s.j3})
            CHECK((op->m * op->m).trace().real() == doctest::Approx(5.0));
    }
    SUBCASE("J^2 = j(j+1) I") {
        for (auto j : {Rational(1, 2), Rational(1, 1), Rational(5, 2)}) {
            SpinOps s = build_spin(j);
            Mat j2 = s.j1.m * s.j1.m + s.j2.m * s.j2.m + s.j3.m * s.j3.m;
            double jv = j.value();
            CHECK((j2 - jv * (jv + 1) * Mat::Identity(j2.rows(), j2.cols()))
                      .cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("sp(N,R) generators") {
    SUBCASE("N=1 coincides with the su(1,1) k = 1/4 (+) 3/4 realization") {
        SpNOps sp = build_spN_generators(1, 16);
        BosonOps b = build_boson(16);
        CHECK((sp.lowering[0].m - 0.5 * b.a.m * b.a.m).cwiseAbs().maxCoeff() < 1e-14);
        Mat k3 = 0.25 * (2.0 * b.adag.m * b.a.m);
        CHECK((sp.k3[0].m - k3).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("disjoint-mode commutator [K11, K22†] = 0") {
        SpNOps sp = build_spN_generators(2, 8);
        const Mat& k11 = sp.lowering[0].m;
        const Mat& k22d = sp.raising[2].m;
        CHECK((k11 * k22d - k22d * k11).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("vacuum expectation of K3_jj vanishes") {
        SpNOps sp = build_spN_generators(2, 8);
        QuantumState vac = QuantumState::basis_state(64, 0);
        CHECK(std::abs(expectation(sp.k3[0], vac)) < 1e-14);
        CHECK(std::abs(expectation(sp.k3[2], vac)) < 1e-14);
    }
}

TEST_CASE("tensor embedding") {
    ModeSystem sys;
    sys.modes = {BasisSpec::fock(6), BasisSpec::fock(6)};
    BosonOps b = build_boson(6);
    OperatorMatrix a0 = tensor_embed(b.a, 0, sys);
    OperatorMatrix ad1 = tensor_embed(b.adag, 1, sys);
    SUBCASE("a on mode 0 annihilates |0,0>") {
        Vec vac = Vec::Zero(36);
        vac(0) = 1.0;
        CHECK((a0.m * vac).norm() == doctest::Approx(0.0));
    }
    SUBCASE("disjoint-mode embeddings commute") {
        CHECK((a0.m * ad1.m - ad1.m * a0.m).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("mode-swap symmetry of coherent expectations") {
        OperatorMatrix q0 = tensor_embed(b.q, 0, sys);
        OperatorMatrix q1 = tensor_embed(b.q, 1, sys);
        Cx alpha(0.3, 0.1), beta(-0.2, 0.4);
        Vec va = coherent_state(alpha, 6).amplitudes();
        Vec vb = coherent_state(beta, 6).amplitudes();
        Vec ab(36), ba(36);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                ab(i * 6 + j) = va(i) * vb(j);
                ba(i * 6 + j) = vb(i) * va(j);
            }
        QuantumState sab = QuantumState::pure(ab), sba = QuantumState::pure(ba);
        Cx e1 = expectation(Mat(q0.m * q1.m), sab);
        Cx e2 = expectation(Mat(q0.m * q1.m), sba);
        CHECK(std::abs(e1 - e2) < 1e-12);
    }
    CHECK_THROWS_AS(tensor_embed(build_boson(4).a, 0, sys), std::invalid_argument);
}

TEST_CASE("expectation values") {
    int D = 40;
    BosonOps b = build_boson(D);
    Mat num = b.adag.m * b.a.m;
    CHECK(std::abs(expectation(num, QuantumState::basis_state(D, 0))) < 1e-14);
    CHECK(std::abs(expectation(num, QuantumState::basis_state(D, 5)) - 5.0) < 1e-12);
    QuantumState coh = coherent_state(Cx(1.0, 0.0), D);
    CHECK(std::abs(expectation(num, coh) - 1.0) < 1e-8);
    CHECK_THROWS_AS(expectation(build_boson(10).q, coh), std::invalid_argument);
}

TEST_CASE("hermitian flag is checked") {
    Mat bad(2, 2);
    bad << Cx(0, 0), Cx(1, 0), Cx(0, 1), Cx(0, 0);
    CHECK_THROWS_AS(OperatorMatrix::make(bad, true, 2), std::logic_error);
}

TEST_CASE("Barut-Girardello CS is a K- eigenstate") {
    Rational k(1, 2);
    int M = 60;
    Su11Ops s = build_su11(k, M);
    Cx eta(0.8, 0.3);
    QuantumState bg = barut_girardello_cs(eta, k, M);
    CHECK((s.kminus.m * bg.amplitudes() - eta * bg.amplitudes()).norm() < 1e-9);
}
