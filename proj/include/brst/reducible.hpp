#pragma once

#include "brst/cohomology.hpp"
#include "brst/derivation.hpp"

namespace brst {

/// Reducibility functions of a p-th reducible constraint set. Z[k] is the
/// level-(k+1) matrix, m_{k+1} x m_k, of coordinate-only elements; m_0 is the
/// constraint count. C holds the chain coefficients of level k >= 2:
/// C[k-2][a_k][a_{k-2}][a_0]. epsilons are the intrinsic parities per level
/// (level 0 first), even by default.
struct ReducibilityData {
    std::vector<std::vector<std::vector<SuperElement>>> Z;
    std::vector<std::vector<std::vector<std::vector<SuperElement>>>> C;
    std::vector<std::vector<int>> epsilons;

    int levels() const { return int(Z.size()); }
    int count(int level) const; // m_level, level 0..levels()
    int epsilon(int level, int index) const;
};

struct ReducibilityReport {
    struct Entry {
        int level;
        std::string relation;
        SuperElement defect;
    };
    std::vector<Entry> entries;
    bool pass = true;
};

/// Level-1 relations Z^{a_0}_{a_1} G_{a_0} = 0 and the chain relations
/// Z^{a_{k-1}}_{a_k} Z^{a_{k-2}}_{a_{k-1}} = (-1)^{eps_{a_{k-2}}}
/// C^{a_{k-2},a_0}_{a_k} G_{a_0}, all exact.
ReducibilityReport verifyReducibility(const std::vector<SuperElement>& G,
                                      const ReducibilityData& rd);

/// The auxiliary differential: Delta F = 0 and
/// Delta eta^{a_k} = eta^{a_{k+1}} Z^{a_k}_{a_{k+1}} (-1)^{eps_{a_k}+k+1},
/// zero on the top level. Requires the higher ghosts declared in the table
/// (pureGhost k+1, aux k). aux(Delta) = +1.
Derivation auxiliaryDifferential(const GeneratorTable& t, const ReducibilityData& rd);

struct DeltaSquaredReport {
    struct Entry {
        std::string generator;
        SuperElement value;                         // Delta^2 eta^{a_k}
        std::vector<SuperElement> idealCoefficients; // h with value = h^a G_a
    };
    std::vector<Entry> entries;
};

/// Delta^2 on every ghost generator, with each value certified to lie in the
/// constraint ideal. Throws ObstructionNotInIdeal on inconsistent data.
DeltaSquaredReport deltaSquaredOnShell(const std::vector<SuperElement>& G,
                                       const ReducibilityData& rd, const Derivation& delta,
                                       int zDegreeBound);

/// A p-th reducible complex: the coordinate algebra in degree zero plus a
/// finite list of monomial generators in degrees 1..p. The degree grading is
/// pureGhost by default; the BRST multi-ghost view uses ghostNumber.
struct ReducibleGenerator {
    std::string label;
    SuperElement element; // single monomial up to sign
    int degree = 1;
};

struct ReducibleComplex {
    const GeneratorTable* table = nullptr;
    std::vector<ReducibleGenerator> gens;
    Grading degreeGrading = Grading::PureGhost;

    int level() const;
};

/// Generation property at truncation: every ghost-sector monomial of degree
/// <= degBound (z-degree <= zBound) lies in the span of products of the
/// declared generators over the coordinate algebra.
bool generationCheck(const ReducibleComplex& rc, int degBound, int zBound);

struct GeneralizedMC {
    std::map<GenId, std::map<size_t, SuperElement>> rho1; // coordinate -> gen index -> coeff
    // (target gen, first gen, second gen) -> stored coefficient, with
    // d(gen_i) = -sum C^i_{jk} w^j w^k over ordered pairs j <= k
    std::map<std::tuple<size_t, size_t, size_t>, SuperElement> structure;
};

/// Extract the first-order derivations rho^1_j and the level-graded structure
/// coefficients of a differential on the complex; d^2 = 0 on generators is
/// checked first. Throws NotInProductSpan when an image term leaves the
/// product span.
GeneralizedMC generalizedMCExtract(const LinearOp& d, const ReducibleComplex& rc);

/// Rebuild d from the extracted data (round-trip targets).
SuperElement gmcApplyToFunction(const ReducibleComplex& rc, const GeneralizedMC& mc,
                                const SuperElement& f);
SuperElement gmcApplyToGenerator(const ReducibleComplex& rc, const GeneralizedMC& mc, size_t i);

} // namespace brst
