#pragma once

#include "brst/charge.hpp"

#include <functional>

namespace brst {

struct JacobiFailure : Error {
    explicit JacobiFailure(const std::string& w) : Error(w) {}
};

/// Ghost-number-one linear operator on the algebra, e.g. a BRST differential
/// or a Chevalley-Eilenberg differential.
using LinearOp = std::function<SuperElement(const SuperElement&)>;

LinearOp asOp(const BRSTDifferential& S);
LinearOp asOp(const Derivation& d);

/// All monomials of the table with the given ghost number and z-degree bound,
/// ordered by (z-degree, monomial order).
std::vector<Monomial> ghostNumberBasis(const GeneratorTable& t, int ghostNumber, int zBound);

/// Finite window of the complex at one ghost number: exact matrix of the
/// operator from the domain basis into the collected image basis.
struct Truncation {
    int ghostNumber = 0;
    int zBound = 0;
    std::vector<Monomial> domainBasis;
    std::vector<Monomial> codomainBasis;
    linalg::QMatrix matrix; // matrix[r][c]: codomain row r in op(domain col c)
};

Truncation assembleMatrix(const GeneratorTable& t, const LinearOp& op, int ghostNumber,
                          int zBound);

/// Largest z-degree drop of the operator across generator values (how far a
/// boundary preimage can sit above the window).
int maxZDegreeDrop(const GeneratorTable& t, const LinearOp& op);

struct CohomologyResult {
    int dimension = 0;
    std::vector<SuperElement> representatives; // cycles reduced mod boundaries
    bool stable = false;                       // same dimension at zBound+1
    int dimensionAtNextBound = 0;
};

/// dim ker(op at ghostNumber, z <= D) minus the dimension of the boundaries
/// landing inside the window (boundary preimages are taken up to
/// D + maxZDegreeDrop so no in-window boundary is missed). Exact rational
/// ranks; the stability flag compares with the computation at D+1.
CohomologyResult cohomologyDim(const GeneratorTable& t, const LinearOp& op, int ghostNumber,
                               int zBound);

/// Chevalley-Eilenberg differential on A (x) C[eta] for constant structure
/// coefficients f^c_{ab} (antisymmetry and Jacobi checked) and an optional
/// representation by vector fields on the coordinate algebra.
Derivation ceComplex(const GeneratorTable& t,
                     const std::vector<std::vector<std::vector<Scalar>>>& f,
                     const std::vector<VectorField>& representation);

} // namespace brst
