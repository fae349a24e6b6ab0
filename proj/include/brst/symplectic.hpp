#pragma once

#include "brst/element.hpp"
#include "brst/linalg.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace brst {

struct GhostInBracket : Error {
    GhostInBracket() : Error("poissonBracket requires coordinate-only arguments") {}
};

struct NotFirstClass : Error {
    NotFirstClass() : Error("constraint system is not first class") {}
};

/// Symplectic R^{2n} with constant symplectic matrix omega and its inverse
/// sigma. Coordinates are the first 2n generators of the table. The default
/// canonical block form pairs (x^i, p_i) with [x^i, p_i] = 1.
struct PhaseSpace {
    int n = 0;
    linalg::QMatrix omega;
    linalg::QMatrix sigma;

    static PhaseSpace canonical(int n);
    static PhaseSpace fromOmega(int n, linalg::QMatrix omega);
    int dim() const { return 2 * n; }
};

/// Polynomial vector field, sparse over the coordinate block.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const GeneratorTable& t) : tab_(&t) {}

    const GeneratorTable& table() const;
    const std::map<GenId, SuperElement>& components() const { return comps_; }
    SuperElement component(GenId coord) const;
    void setComponent(GenId coord, SuperElement e);
    bool isZero() const;

    /// Action as a derivation on coordinate polynomials.
    SuperElement operator()(const SuperElement& f) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    /// Module structure over the coordinate algebra.
    VectorField scaled(const SuperElement& f) const;
    bool operator==(const VectorField& o) const { return comps_ == o.comps_; }

  private:
    const GeneratorTable* tab_ = nullptr;
    std::map<GenId, SuperElement> comps_;
};

/// Lie bracket oriented so that the Hamiltonian-field map is a homomorphism:
/// bracket(X_f, X_g) = X_{[f,g]} for the Poisson bracket below.
VectorField bracket(const VectorField& a, const VectorField& b);

/// sigma^{lm} (d_l f)(d_m g) on coordinate-only elements.
SuperElement poissonBracket(const PhaseSpace& ps, const SuperElement& f, const SuperElement& g);

/// Graded Poisson bracket on the extended algebra: the coordinate part of
/// poissonBracket plus the ghost pairing fixed by [eta^a, P_b] = -delta^a_b,
/// calibrated so that [P_a, eta^b G_b] = -G_a. Graded antisymmetric, graded
/// Leibniz and Jacobi; restricts to poissonBracket on coordinate elements.
SuperElement extendedBracket(const PhaseSpace& ps, const SuperElement& a, const SuperElement& b);

/// First-class constraint data on a polynomial phase space: constraints G_a
/// (even, coordinate-only) and structure functions C^c_{ab}, antisymmetric
/// in (a,b). First-classness is checked by verifyFirstClass, not assumed.
class ConstraintSystem {
  public:
    ConstraintSystem(PhaseSpace space, std::shared_ptr<GeneratorTable> table,
                     std::vector<SuperElement> constraints,
                     std::vector<std::vector<std::vector<SuperElement>>> structure);

    const PhaseSpace& space() const { return space_; }
    const GeneratorTable& table() const { return *table_; }
    std::shared_ptr<GeneratorTable> tablePtr() const { return table_; }
    int count() const { return int(constraints_.size()); }
    const SuperElement& constraint(int a) const { return constraints_.at(size_t(a)); }
    /// C^c_{ab}
    const SuperElement& structure(int a, int b, int c) const;

  private:
    PhaseSpace space_;
    std::shared_ptr<GeneratorTable> table_;
    std::vector<SuperElement> constraints_;
    std::vector<std::vector<std::vector<SuperElement>>> structure_;
};

struct FirstClassReport {
    struct Entry {
        int a, b;
        SuperElement defect; // [G_a,G_b] - C^c_{ab} G_c
    };
    std::vector<Entry> defects; // all pairs a < b
    bool pass = true;
};

FirstClassReport verifyFirstClass(const ConstraintSystem& cs);

/// X_a^l = sigma^{lm} d_m G_a; applying the field equals poissonBracket(., G_a).
VectorField hamiltonianVectorField(const ConstraintSystem& cs, int a);
VectorField hamiltonianVectorField(const PhaseSpace& ps, const SuperElement& g);

/// Coordinate monomials of total degree <= bound, ordered by (degree, lex).
std::vector<Monomial> coordinateMonomials(const GeneratorTable& t, int bound);

/// Find polynomials h^c, deg <= bound, with r = h^c G_c; exact linear solve,
/// deterministic representative. nullopt if not solvable within the bound.
std::optional<std::vector<SuperElement>> idealMembership(const SuperElement& r,
                                                         const std::vector<SuperElement>& G,
                                                         int zDegreeBound);

/// Default degree bound: deg(r) - min_a deg(G_a) + 2.
int defaultIdealBound(const SuperElement& r, const std::vector<SuperElement>& G);

/// Solve [G_a,G_b] = C^c_{ab} G_c for polynomial structure functions within
/// the degree bound; antisymmetrized in (a,b). nullopt if some pair fails.
std::optional<std::vector<std::vector<std::vector<SuperElement>>>>
solveStructureFunctions(const PhaseSpace& ps, const GeneratorTable& t,
                        const std::vector<SuperElement>& G, int zDegreeBound);

} // namespace brst
