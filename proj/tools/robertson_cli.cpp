// robertson: batch CLI for Robertson intelligent states.
//
// Subcommands: ris, report, diagonalize, sweep, verify.
// Exit codes: 0 ok, 1 verify failure, 2 usage/invalid parameters,
//             3 non-normalizable parameters, 4 truncation failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robertson/parallel.hpp"
#include "robertson/ris.hpp"
#include "robertson/transform.hpp"

using namespace robertson;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonNormalizable = 3;
constexpr int kExitTruncation = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Cx parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw UsageError("cannot parse complex value '" + s + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw UsageError("cannot parse complex value '" + s + "' (expected re,im)");
    }
    std::string rest;
    if (in >> rest) throw UsageError("trailing characters in complex value '" + s + "'");
    return {re, im};
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json matrix_json(const RMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

RMat matrix_from_json(const json& rows) {
    int n = static_cast<int>(rows.size());
    RMat m(n, rows.at(0).size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows.at(i).at(j).get<double>();
    return m;
}

// matrix CSV: one row per line, comma-separated decimal reals, observable
// ordering (p_1..p_N, q_1..q_N)
RMat read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open matrix file '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw UsageError("matrix file '" + path + "' is empty");
    RMat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw UsageError("matrix file '" + path + "' has ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

void write_matrix_csv(std::ostream& out, const RMat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << fmt17(m(i, j));
        }
        out << '\n';
    }
}

void emit(const json& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write '" + path + "'");
        out << doc.dump(2) << "\n";
    }
}

json pair_report(const UncertaintyPair& pair, const InequalityReport& rep) {
    json j;
    j["labels"] = pair.labels;
    j["sigma"] = matrix_json(pair.sigma);
    j["c"] = matrix_json(pair.cmat);
    j["det_sigma"] = rep.det_sigma;
    j["det_c"] = rep.det_c;
    j["robertson_gap"] = rep.robertson_gap;
    j["product_gap"] = rep.product_gap;
    j["heisenberg_gap"] = rep.heisenberg_gap;
    j["minimized"] = rep.robertson_minimized;
    j["truncation_warning"] = pair.truncation_warning;
    return j;
}

// squeezing ratios Delta X / Delta X_reference (reference: coherent-state
// floor for each observable)
json squeezing_json(const UncertaintyPair& pair, const std::vector<double>& ref_var) {
    json j = json::array();
    for (int i = 0; i < pair.n; ++i) {
        json e;
        e["label"] = pair.labels[i];
        e["delta"] = std::sqrt(pair.sigma(i, i));
        e["reference"] = std::sqrt(ref_var[i]);
        e["ratio"] = std::sqrt(pair.sigma(i, i) / ref_var[i]);
        e["squeezed"] = pair.sigma(i, i) < ref_var[i] - 1e-12;
        j.push_back(e);
    }
    return j;
}

// ---------------------------------------------------------------------------
// ris
// ---------------------------------------------------------------------------

struct RisOptions {
    std::string family;
    std::string k_str = "1/4", j_str = "1/2";
    std::string u_str = "1", v_str = "0", w_str = "0", z_str = "0";
    std::string alpha_str = "0", beta_str;
    std::string parity = "even";
    double r = 0.0;
    int n_modes = 1;
    int dim = 128;
    int max_dim = 1 << 14;
    std::string out;
};

int run_ris_su11(const RisOptions& opt) {
    Rational k = Rational::parse(opt.k_str);
    Cx u = parse_complex(opt.u_str), v = parse_complex(opt.v_str);
    Cx w = parse_complex(opt.w_str), z = parse_complex(opt.z_str);
    RisState st = su11_ris(u, v, w, z, k, opt.dim, opt.max_dim);
    int dim = st.state.dim();
    Su11Ops ops = build_su11(k, dim);
    UncertaintyPair pair;
    if (std::abs(w) < 1e-14) {
        pair = uncertainty_pair({ops.k1, ops.k2}, st.state, {"K1", "K2"});
    } else {
        // the minimizing pair for w != 0: hermitian quadratures of the
        // defining operator u K- + v K+ + w K3
        Mat O = u * ops.kminus.m + v * ops.kplus.m + w * ops.k3.m;
        pair = uncertainty_pair({OperatorMatrix::make((O + O.adjoint()) / 2.0, true, dim - 1),
                                 OperatorMatrix::make((O - O.adjoint()) / Cx(0, 2), true, dim - 1)},
                                st.state, {"X1", "X2"});
    }
    auto rep = inequality_report(pair);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "ris";
    doc["family"] = "su11";
    doc["spec"] = {{"k", opt.k_str},          {"u", opt.u_str}, {"v", opt.v_str},
                   {"w", opt.w_str},          {"z", opt.z_str}, {"truncation_dim", dim}};
    doc["residual"] = st.residual;
    doc["tail_mass"] = st.tail_mass;
    doc["converged"] = st.converged;
    doc["hermitian_combination"] = st.hermitian_combination;
    doc.update(pair_report(pair, rep));
    if (std::abs(w) < 1e-14)
        doc["squeezing"] = squeezing_json(pair, {k.value() / 2, k.value() / 2});
    emit(doc, opt.out);
    return (st.converged && rep.robertson_minimized) ? kExitOk : kExitVerify;
}

int run_ris_su2(const RisOptions& opt) {
    Rational j = Rational::parse(opt.j_str);
    if (opt.beta_str.empty()) throw UsageError("--beta required for family su2");
    std::vector<double> vals;
    {
        std::istringstream in(opt.beta_str);
        std::string cell;
        while (std::getline(in, cell, ',')) vals.push_back(std::stod(cell));
    }
    std::array<Cx, 3> beta;
    if (vals.size() == 3) {
        for (int i = 0; i < 3; ++i) beta[i] = vals[i];
    } else if (vals.size() == 6) {
        for (int i = 0; i < 3; ++i) beta[i] = Cx(vals[2 * i], vals[2 * i + 1]);
    } else {
        throw UsageError("--beta expects 3 reals or 3 re,im pairs (6 values)");
    }
    auto res = su2_ris(beta, j);
    SpinOps s = build_spin(j);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "ris";
    doc["family"] = "su2";
    doc["spec"] = {{"j", opt.j_str}, {"beta", opt.beta_str}};
    doc["b"] = {res.b.real(), res.b.imag()};
    bool all_ok = true;
    json states = json::array();
    double jv = j.value();
    for (size_t i = 0; i < res.states.size(); ++i) {
        const RisState& st = res.states[i];
        auto pair = uncertainty_pair({s.j1, s.j2, s.j3}, st.state, {"J1", "J2", "J3"});
        json e;
        e["m"] = -jv + static_cast<double>(i);
        e["eigenvalue"] = {res.eigenvalues[i].real(), res.eigenvalues[i].imag()};
        e["residual"] = st.residual;
        e["det_sigma"] = pair.det_sigma();
        e["det_c"] = pair.det_c();
        states.push_back(e);
        all_ok = all_ok && st.converged && st.residual < 1e-8;
    }
    doc["states"] = states;
    emit(doc, opt.out);
    return all_ok ? kExitOk : kExitVerify;
}

int run_ris_canonical(const RisOptions& opt) {
    if (opt.n_modes != 1)
        throw UsageError("family canonical: only --N 1 is supported on the CLI");
    Cx alpha = parse_complex(opt.alpha_str);
    Cx u = std::cosh(opt.r), v = -std::sinh(opt.r);
    RisState st = canonical_ris(u, v, alpha, opt.dim);
    int dim = st.state.dim();
    BosonOps b = build_boson(dim);
    auto pair = uncertainty_pair({b.p, b.q}, st.state, {"p", "q"});
    auto rep = inequality_report(pair, {1, 2, 3});
    json doc;
    doc["schema"] = 1;
    doc["command"] = "ris";
    doc["family"] = "canonical";
    doc["spec"] = {{"N", 1}, {"r", opt.r}, {"alpha", opt.alpha_str}, {"truncation_dim", dim}};
    doc["residual"] = st.residual;
    doc["tail_mass"] = st.tail_mass;
    doc["converged"] = st.converged;
    doc.update(pair_report(pair, rep));
    doc["squeezing"] = squeezing_json(pair, {0.5, 0.5});
    json tr = json::array();
    for (const auto& e : rep.trace_ur)
        tr.push_back({{"k", e.k}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"gap", e.gap}});
    doc["trace_ur"] = tr;
    emit(doc, opt.out);
    return (st.converged && rep.robertson_minimized) ? kExitOk : kExitVerify;
}

int run_ris_squared(const RisOptions& opt) {
    Cx u = parse_complex(opt.u_str), v = parse_complex(opt.v_str);
    Cx z = parse_complex(opt.z_str);
    Parity par;
    if (opt.parity == "even") par = Parity::Even;
    else if (opt.parity == "odd") par = Parity::Odd;
    else throw UsageError("--parity must be even or odd");
    RisState st = squared_amplitude_ris(u, v, z, par, opt.dim, opt.max_dim);
    int dim = st.state.dim();
    // band construction of a^2 (avoids an O(dim^3) dense product at the
    // adaptive upper dimensions)
    Mat asq = Mat::Zero(dim, dim);
    for (int n = 2; n < dim; ++n)
        asq(n - 2, n) = std::sqrt(static_cast<double>(n) * (n - 1));
    Mat x = (asq + asq.adjoint()) / 2.0;
    Mat y = -Cx(0, 1) * (asq - asq.adjoint()) / 2.0;
    auto pair = uncertainty_pair({OperatorMatrix::make(x, true, dim - 2),
                                  OperatorMatrix::make(y, true, dim - 2)},
                                 st.state, {"X", "Y"});
    auto rep = inequality_report(pair);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "ris";
    doc["family"] = "squared";
    doc["spec"] = {{"u", opt.u_str}, {"v", opt.v_str}, {"z", opt.z_str},
                   {"parity", opt.parity}, {"truncation_dim", dim}};
    doc["residual"] = st.residual;
    doc["tail_mass"] = st.tail_mass;
    doc["converged"] = st.converged;
    doc.update(pair_report(pair, rep));
    emit(doc, opt.out);
    return (st.converged && rep.robertson_minimized) ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// report: re-read a JSON report, recompute gaps from the stored matrices
// ---------------------------------------------------------------------------

int run_report(const std::string& input, const std::string& out) {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open report '" + input + "'");
    json doc = json::parse(in);
    if (doc.value("schema", 0) != 1) throw UsageError("unsupported report schema");
    RMat sigma = matrix_from_json(doc.at("sigma"));
    RMat cmat = matrix_from_json(doc.at("c"));
    UncertaintyPair pair;
    pair.n = static_cast<int>(sigma.rows());
    pair.sigma = sigma;
    pair.cmat = cmat;
    pair.labels = doc.at("labels").get<std::vector<std::string>>();
    auto rep = inequality_report(pair);
    json outdoc;
    outdoc["schema"] = 1;
    outdoc["command"] = "report";
    outdoc["source"] = input;
    outdoc["det_sigma"] = rep.det_sigma;
    outdoc["det_c"] = rep.det_c;
    outdoc["robertson_gap"] = rep.robertson_gap;
    outdoc["product_gap"] = rep.product_gap;
    outdoc["heisenberg_gap"] = rep.heisenberg_gap;
    double drift = std::max({std::abs(rep.det_sigma - doc.at("det_sigma").get<double>()),
                             std::abs(rep.det_c - doc.at("det_c").get<double>()),
                             std::abs(rep.robertson_gap - doc.at("robertson_gap").get<double>())});
    outdoc["roundtrip_drift"] = drift;
    outdoc["consistent"] = drift < 1e-12;
    emit(outdoc, out);
    return drift < 1e-12 ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// diagonalize
// ---------------------------------------------------------------------------

int run_diagonalize(const std::string& input, const std::string& mode, const std::string& out) {
    RMat m = read_matrix_csv(input);
    if (m.rows() != m.cols()) throw UsageError("input matrix is not square");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw UsageError("input matrix is not symmetric");
    json doc;
    doc["schema"] = 1;
    doc["command"] = "diagonalize";
    doc["mode"] = mode;
    UncertaintyPair pair;
    pair.n = static_cast<int>(m.rows());
    pair.sigma = m;
    pair.cmat = RMat::Zero(pair.n, pair.n);
    pair.labels.assign(pair.n, "X");
    if (mode == "symplectic") {
        if (pair.n % 2 != 0) throw UsageError("symplectic mode needs even dimension");
        WilliamsonResult res;
        try {
            res = williamson_diagonalize(m);
        } catch (const std::domain_error& e) {
            throw UsageError(std::string("symplectic mode: ") + e.what());
        }
        doc["lambda"] = matrix_json(res.map.lambda);
        json diag = json::array(), prods = json::array();
        for (int i = 0; i < res.diagonal.size(); ++i) diag.push_back(res.diagonal(i));
        for (int i = 0; i < res.pair_products.size(); ++i)
            prods.push_back(res.pair_products(i));
        doc["diagonal"] = diag;
        doc["pair_products"] = prods;
        RMat d = res.map.lambda * m * res.map.lambda.transpose();
        doc["offdiagonal_drift"] =
            (d - RMat(RVec(res.diagonal).asDiagonal())).cwiseAbs().maxCoeff();
        int N = pair.n / 2;
        RMat J = symplectic_form(N);
        doc["symplectic_drift"] =
            (res.map.lambda * J * res.map.lambda.transpose() - J).cwiseAbs().maxCoeff();
        double c0sq = 4.0 * res.pair_products.minCoeff();
        json tr = json::array();
        for (int k = 1; k <= 3; ++k) {
            double lhs = trace_ur_lhs(m, k);
            double rhs = N * std::pow(c0sq, k) / std::pow(2.0, 2 * k - 1);
            tr.push_back({{"k", k}, {"lhs", lhs}, {"rhs", rhs}, {"gap", lhs - rhs}});
        }
        doc["trace_ur"] = tr;
    } else if (mode == "orthogonal") {
        auto [map, diag] = orthogonal_diagonalize(pair);
        doc["lambda"] = matrix_json(map.lambda);
        json d = json::array();
        for (int i = 0; i < pair.n; ++i) d.push_back(diag.sigma(i, i));
        doc["diagonal"] = d;
        RMat full = map.lambda * m * map.lambda.transpose();
        double off = 0.0;
        for (int i = 0; i < pair.n; ++i)
            for (int j = 0; j < pair.n; ++j)
                if (i != j) off = std::max(off, std::abs(full(i, j)));
        doc["offdiagonal_drift"] = off;
        doc["orthogonality_drift"] =
            (map.lambda * map.lambda.transpose() - RMat::Identity(pair.n, pair.n))
                .cwiseAbs()
                .maxCoeff();
    } else {
        throw UsageError("--mode must be symplectic or orthogonal");
    }
    emit(doc, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepRow {
    bool ok = false;
    std::string line;
};

int run_sweep(const std::string& kind, const std::string& k_str, double zre, double xmax,
              double step, const std::string& out, bool serial) {
    Rational k = Rational::parse(k_str);
    double kv = k.value();
    if (step <= 0) throw UsageError("--step must be positive");
    std::ofstream fout;
    std::ostream* os = &std::cout;
    if (!out.empty() && out != "-") {
        fout.open(out);
        if (!fout) throw UsageError("cannot write '" + out + "'");
        os = &fout;
    }
    if (kind == "xfamily") {
        long count = static_cast<long>(std::floor(xmax / step + 1e-9)) + 1;
        if (count > 10000) throw UsageError("grid too large (> 1e4 points)");
        bool fock_sector = (k == Rational(1, 4)) || (k == Rational(3, 4));
        *os << "x,delta_k1,delta_k2,sigma11,sigma22,sigma12,det_sigma,det_c,"
               "robertson_gap,delta_p,joint_squeezing\n";
        std::vector<SweepRow> rows(count);
        parallel_for(
            count,
            [&](long i) {
                double x = i * step;
                Cx u = std::sqrt(1.0 + x * x), v = -x, z = zre;
                try {
                    RisState st = su11_ris(u, v, 0.0, z, k, 256);
                    // (K1, K2) moments by band action; dense operators at the
                    // adaptive upper dimensions would be needlessly heavy here
                    const Vec& psi = st.state.amplitudes();
                    int M = static_cast<int>(psi.size());
                    Vec km = Vec::Zero(M), kp = Vec::Zero(M);
                    for (int n = 0; n + 1 < M; ++n)
                        km(n) = std::sqrt((n + 1.0) * (n + 2.0 * kv)) * psi(n + 1);
                    for (int n = 1; n < M; ++n)
                        kp(n) = std::sqrt(n * (n - 1.0 + 2.0 * kv)) * psi(n - 1);
                    Vec v1 = (kp + km) / 2.0;
                    Vec v2 = (kp - km) / Cx(0, 2);
                    double m1 = psi.dot(v1).real(), m2 = psi.dot(v2).real();
                    Cx xy = v1.dot(v2), yx = v2.dot(v1);
                    double s11 = v1.squaredNorm() - m1 * m1;
                    double s22 = v2.squaredNorm() - m2 * m2;
                    double s12 = (0.5 * (xy + yx)).real() - m1 * m2;
                    double c12 = (-0.5 * Cx(0, 1) * (xy - yx)).real();
                    double det_sigma = s11 * s22 - s12 * s12;
                    double det_c = c12 * c12;
                    double dp = std::nan("");
                    bool joint = false;
                    if (fock_sector) {
                        Parity par = (k == Rational(1, 4)) ? Parity::Even : Parity::Odd;
                        RisState fs = squared_amplitude_ris(u, v, 2.0 * z, par,
                                                            2 * st.state.dim());
                        const Vec& phi = fs.state.amplitudes();
                        int D = static_cast<int>(phi.size());
                        Vec pphi = Vec::Zero(D);  // p = i(a† - a)/sqrt(2)
                        for (int n = 0; n < D; ++n) {
                            Cx acc = 0.0;
                            if (n > 0) acc += std::sqrt(static_cast<double>(n)) * phi(n - 1);
                            if (n + 1 < D)
                                acc -= std::sqrt(n + 1.0) * phi(n + 1);
                            pphi(n) = Cx(0, 1) * acc / std::sqrt(2.0);
                        }
                        double mp = phi.dot(pphi).real();
                        dp = std::sqrt(pphi.squaredNorm() - mp * mp);
                        joint = s22 < kv / 2 - 1e-12 && dp < 1.0 / std::sqrt(2.0);
                    }
                    std::ostringstream line;
                    line << fmt17(x) << ',' << fmt17(std::sqrt(s11)) << ','
                         << fmt17(std::sqrt(s22)) << ',' << fmt17(s11) << ',' << fmt17(s22)
                         << ',' << fmt17(s12) << ',' << fmt17(det_sigma) << ','
                         << fmt17(det_c) << ',' << fmt17(det_sigma - det_c) << ','
                         << (fock_sector ? fmt17(dp) : std::string("nan")) << ','
                         << (joint ? 1 : 0);
                    rows[i] = {true, line.str()};
                } catch (const std::exception& e) {
                    rows[i] = {false, std::string("# x=") + fmt17(x) + " failed: " + e.what()};
                }
            },
            serial);
        for (const auto& r : rows) *os << r.line << '\n';
        for (const auto& r : rows)
            if (!r.ok) return kExitTruncation;
        return kExitOk;
    }
    if (kind == "tau") {
        long count = static_cast<long>(std::floor(2.0 * xmax / step + 1e-9)) + 1;
        if (count > 10000) throw UsageError("grid too large (> 1e4 points)");
        if (xmax >= 1.0) throw UsageError("tau sweep needs |tau| < 1");
        *os << "tau,var_k1,var_k2,floor,above_floor\n";
        std::vector<SweepRow> rows(count);
        Su11Ops ops = build_su11(k, 512);
        parallel_for(
            count,
            [&](long i) {
                double tau = -xmax + i * step;
                QuantumState cs = su11_group_cs(tau, k, 512);
                auto pair = uncertainty_pair({ops.k1, ops.k2}, cs);
                bool above =
                    pair.sigma(0, 0) >= kv / 2 - 1e-10 && pair.sigma(1, 1) >= kv / 2 - 1e-10;
                std::ostringstream line;
                line << fmt17(tau) << ',' << fmt17(pair.sigma(0, 0)) << ','
                     << fmt17(pair.sigma(1, 1)) << ',' << fmt17(kv / 2) << ','
                     << (above ? 1 : 0);
                rows[i] = {true, line.str()};
            },
            serial);
        for (const auto& r : rows) *os << r.line << '\n';
        return kExitOk;
    }
    throw UsageError("--kind must be xfamily or tau");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

std::vector<unsigned> load_seeds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open seeds file '" + path + "'");
    std::vector<unsigned> seeds;
    unsigned long s;
    while (in >> s) seeds.push_back(static_cast<unsigned>(s));
    if (seeds.empty()) throw UsageError("seeds file '" + path + "' is empty");
    return seeds;
}

QuantumState verify_random_state(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Cx(g(rng), g(rng)) * std::exp(-i / 8.0);
    return QuantumState::pure(v);
}

int run_verify(const std::string& seeds_path, long seed_opt, bool inject_fault) {
    std::vector<unsigned> seeds;
    if (!seeds_path.empty())
        seeds = load_seeds(seeds_path);
    else if (seed_opt >= 0)
        seeds = {static_cast<unsigned>(seed_opt)};
    else
        throw UsageError("verify is randomized: pass --seeds FILE or --seed N explicitly");

    struct Property {
        std::string name;
        bool pass = true;
        std::string detail;
    };
    std::vector<Property> props = {{"robertson_gap"}, {"trace_ur"}, {"sigma_psd"},
                                   {"odd_n_detc"},    {"williamson_certificate"}};
    int n_checked = 0;
    for (size_t si = 0; si < seeds.size() && si < 16; ++si) {
        unsigned seed = seeds[si];
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);

        // robertson_gap: su(1,1) RIS (w = 0) must satisfy det sigma = det C
        double rho = 0.05 + 0.5 * uni(rng);
        Cx v = std::polar(rho, 2 * M_PI * uni(rng));
        Cx z = std::polar(uni(rng), 2 * M_PI * uni(rng));
        if (su11_normalizable(1.0, v, 0.0)) {
            try {
                RisState st = su11_ris(1.0, v, 0.0, z, Rational(1, 2), 128, 2048);
                Su11Ops ops = build_su11(Rational(1, 2), st.state.dim());
                auto pair = uncertainty_pair({ops.k1, ops.k2}, st.state);
                if (inject_fault) pair.sigma(0, 0) += 1e-3;  // negative-control hook
                double gap = std::abs(pair.det_sigma() - pair.det_c());
                if (gap > 1e-7 * std::max(1.0, pair.det_c())) {
                    props[0].pass = false;
                    props[0].detail = "gap " + fmt17(gap) + " at seed " + std::to_string(seed);
                }
            } catch (const TruncationError&) {
            }
        }

        // random-state properties
        BosonOps b = build_boson(48);
        QuantumState st = verify_random_state(48, seed);
        auto pair = uncertainty_pair({b.p, b.q}, st);
        for (int kk = 1; kk <= 3; ++kk)
            if (trace_ur_lhs(pair.sigma, kk) < 1.0 / std::pow(2.0, 2 * kk - 1) - 1e-9) {
                props[1].pass = false;
                props[1].detail = "seed " + std::to_string(seed);
            }
        Eigen::SelfAdjointEigenSolver<RMat> es(pair.sigma, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10) {
            props[2].pass = false;
            props[2].detail = "seed " + std::to_string(seed);
        }
        SpinOps sp = build_spin(Rational(1, 1));
        QuantumState st3 = verify_random_state(3, seed + 17u);
        auto triple = uncertainty_pair({sp.j1, sp.j2, sp.j3}, st3);
        if (std::abs(triple.det_c()) > 1e-12) {
            props[3].pass = false;
            props[3].detail = "seed " + std::to_string(seed);
        }

        // Williamson certificate on a seeded SPD matrix
        std::normal_distribution<double> g(0.0, 1.0);
        RMat m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = g(rng);
        RMat sig = m * m.transpose() + 0.05 * RMat::Identity(4, 4);
        auto res = williamson_diagonalize(sig);
        RMat J = symplectic_form(2);
        double drift =
            (res.map.lambda * J * res.map.lambda.transpose() - J).cwiseAbs().maxCoeff();
        RMat d = res.map.lambda * sig * res.map.lambda.transpose();
        drift = std::max(drift,
                         (d - RMat(RVec(res.diagonal).asDiagonal())).cwiseAbs().maxCoeff());
        if (drift > 1e-9) {
            props[4].pass = false;
            props[4].detail = "drift " + fmt17(drift) + " at seed " + std::to_string(seed);
        }
        ++n_checked;
    }

    bool all = true;
    for (const auto& p : props) {
        std::cout << (p.pass ? "PASS " : "FAIL ") << p.name;
        if (!p.pass && !p.detail.empty()) std::cout << " (" << p.detail << ")";
        std::cout << "\n";
        all = all && p.pass;
    }
    std::cout << (all ? "VERIFY OK" : "VERIFY FAILED") << " (" << n_checked << " seeds)\n";
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robertson intelligent states toolkit"};
    app.require_subcommand(1);

    RisOptions ris;
    auto* cmd_ris = app.add_subcommand("ris", "construct a RIS and report its uncertainty pair");
    cmd_ris->add_option("--family", ris.family, "su11 | su2 | canonical | squared")->required();
    cmd_ris->add_option("--k", ris.k_str, "Bargmann index (rational, e.g. 1/4)");
    cmd_ris->add_option("--j", ris.j_str, "spin (rational, e.g. 3/2)");
    cmd_ris->add_option("--u", ris.u_str, "complex re[,im]");
    cmd_ris->add_option("--v", ris.v_str, "complex re[,im]");
    cmd_ris->add_option("--w", ris.w_str, "complex re[,im]");
    cmd_ris->add_option("--z", ris.z_str, "eigenvalue, complex re[,im]");
    cmd_ris->add_option("--alpha", ris.alpha_str, "canonical eigenvalue, complex re[,im]");
    cmd_ris->add_option("--beta", ris.beta_str, "su2 coefficients: 3 reals or 3 re,im pairs");
    cmd_ris->add_option("--parity", ris.parity, "even | odd (family squared)");
    cmd_ris->add_option("--r", ris.r, "canonical squeeze parameter");
    cmd_ris->add_option("--N", ris.n_modes, "mode count (canonical)");
    cmd_ris->add_option("--dim", ris.dim, "initial truncation dimension");
    cmd_ris->add_option("--max-dim", ris.max_dim, "adaptive truncation cap");
    cmd_ris->add_option("--out", ris.out, "output path (default stdout)");

    std::string report_in, report_out;
    auto* cmd_report = app.add_subcommand("report", "recompute gaps from a stored JSON report");
    cmd_report->add_option("--input", report_in, "report JSON path")->required();
    cmd_report->add_option("--out", report_out, "output path (default stdout)");

    std::string diag_in, diag_mode = "symplectic", diag_out;
    auto* cmd_diag = app.add_subcommand("diagonalize", "diagonalize a covariance matrix CSV");
    cmd_diag->add_option("--input", diag_in, "matrix CSV, ordering (p_1..p_N, q_1..q_N)")
        ->required();
    cmd_diag->add_option("--mode", diag_mode, "symplectic | orthogonal");
    cmd_diag->add_option("--out", diag_out, "output path (default stdout)");

    std::string sweep_kind = "xfamily", sweep_k = "1/4", sweep_out;
    double sweep_z = -1.0, sweep_max = 4.0, sweep_step = 0.25;
    bool sweep_serial = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "CSV squeezing curves over a parameter grid");
    cmd_sweep->add_option("--kind", sweep_kind, "xfamily | tau");
    cmd_sweep->add_option("--k", sweep_k, "Bargmann index (rational)");
    cmd_sweep->add_option("--z", sweep_z, "eigenvalue (xfamily, real)");
    cmd_sweep->add_option("--max", sweep_max, "grid maximum (x or |tau|)");
    cmd_sweep->add_option("--step", sweep_step, "grid step");
    cmd_sweep->add_option("--out", sweep_out, "CSV path (default stdout)");
    cmd_sweep->add_flag("--serial", sweep_serial, "disable parallel evaluation");

    std::string verify_seeds;
    long verify_seed = -1;
    bool verify_fault = false;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite on seeded inputs");
    cmd_verify->add_option("--seeds", verify_seeds, "seed manifest (one decimal seed per line)");
    cmd_verify->add_option("--seed", verify_seed, "single explicit seed");
    cmd_verify->add_flag("--inject-fault", verify_fault,
                         "perturb sigma before checking (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_ris->parsed()) {
            if (ris.family == "su11") return run_ris_su11(ris);
            if (ris.family == "su2") return run_ris_su2(ris);
            if (ris.family == "canonical") return run_ris_canonical(ris);
            if (ris.family == "squared") return run_ris_squared(ris);
            throw UsageError("unknown --family '" + ris.family + "'");
        }
        if (cmd_report->parsed()) return run_report(report_in, report_out);
        if (cmd_diag->parsed()) return run_diagonalize(diag_in, diag_mode, diag_out);
        if (cmd_sweep->parsed())
            return run_sweep(sweep_kind, sweep_k, sweep_z, sweep_max, sweep_step, sweep_out,
                             sweep_serial);
        if (cmd_verify->parsed()) return run_verify(verify_seeds, verify_seed, verify_fault);
    } catch (const NonNormalizableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonNormalizable;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
