#ifndef ROBERTSON_TRANSFORM_HPP
#define ROBERTSON_TRANSFORM_HPP

#include "robertson/moments.hpp"

namespace robertson {

enum class CongruenceClass { General, Orthogonal, Symplectic };

struct CongruenceMap {
    RMat lambda;
    CongruenceClass tag = CongruenceClass::General;

    int n() const { return static_cast<int>(lambda.rows()); }
    double det() const;
    void check() const;  // det != 0; class property within tolerance
};

// Williamson form: Lambda sigma Lambda^T = diag(d_1..d_N, d_1..d_N) with the
// symplectic eigenvalues d_j (moduli of eigenvalues of iJ sigma), descending.
struct WilliamsonResult {
    CongruenceMap map;            // symplectic
    RVec diagonal;                // length 2N, paired as (d_j, d_{N+j})
    RVec pair_products;           // d_j * d_{N+j}
};

struct InvariantDrift {
    std::string name;
    double drift;
};

UncertaintyPair transform_sigma(const CongruenceMap& map, const UncertaintyPair& pair);

// Orthogonal Lambda with Lambda sigma Lambda^T diagonal, eigenvalues sorted
// descending.
std::pair<CongruenceMap, UncertaintyPair> orthogonal_diagonalize(const UncertaintyPair& pair);

WilliamsonResult williamson_diagonalize(const RMat& sigma);

struct SpinDecorrelation {
    RMat rotation;                // 3x3 orthogonal, det +1
    UncertaintyPair diagonal_pair;
    std::vector<OperatorMatrix> rotated_ops;
};

SpinDecorrelation spin_decorrelate(const std::vector<OperatorMatrix>& spin_triple,
                                   const QuantumState& state);

// Drift of each invariant of the class claimed by `map`:
// det sigma (SL), Tr sigma^k (orthogonal), Tr(sigma J)^k (symplectic).
std::vector<InvariantDrift> invariant_suite(const CongruenceMap& map, const UncertaintyPair& pair);

// c0^2 for the trace UR on non-canonical lists: square of the minimal
// |<[X'_j, X'_{N+j}]>| over the Williamson-diagonalizing frame, which equals
// (2 min_j pair product) for commutators recovered from C' = Lambda C Lambda^T.
double c0_squared(const UncertaintyPair& pair);

}  // namespace robertson

#endif
