#ifndef ROBERTSON_TEST_ORACLES_HPP
#define ROBERTSON_TEST_ORACLES_HPP

// Independent brute-force reference implementations, used only by tests.
// These share no computational code with the main modules: definitions are
// evaluated by direct loops and naive series.

#include <random>
#include <vector>

#include "robertson/types.hpp"

namespace robertson::oracle {

struct OracleReport {
    std::string quantity;
    Cx main_value;
    Cx oracle_value;
    double rel_error;
    bool pass;
};

OracleReport compare(const std::string& quantity, Cx main_value, Cx oracle_value, double tol);

// Kummer function M(a,b,x) = sum (a)_n x^n / ((b)_n n!); log-space Pochhammer
// products for |x| > 10.
Cx kummer_series(Cx a, Cx b, Cx x, int max_terms = 4000);

// Taylor coefficients of exp(c x) M(a, b, c1 x) up to order n-1 (the
// Barut-Girardello-representation expansion of the su(1,1) eigenstates).
std::vector<Cx> kummer_exp_product_coeffs(Cx a, Cx b, Cx c, Cx c1, int n);

enum class StateKind { Pure, Mixed, GaussianLike };

// Reproducible tail-damped random states (amplitudes weighted by e^{-n/8}).
QuantumState random_state(int dim, StateKind kind, unsigned seed);

// Seeds manifest: one decimal seed per line.
std::vector<unsigned> load_seed_manifest(const std::string& path);

// Naive elementwise recomputation of sigma and C by definition loops.
struct BruteMoments {
    RMat sigma;
    RMat cmat;
};
BruteMoments brute_sigma(const std::vector<Mat>& ops, const QuantumState& state);

// <q^2> - <q>^2 of grid samples by trapezoidal quadrature (1D).
double grid_variance(const std::vector<Cx>& amplitudes, const std::vector<double>& grid);
double grid_mean(const std::vector<Cx>& amplitudes, const std::vector<double>& grid);

}  // namespace robertson::oracle

#endif
