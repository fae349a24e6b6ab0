#pragma once

#include "brst/symplectic.hpp"

#include <map>

namespace brst {

struct ParityMismatch : Error {
    ParityMismatch() : Error("anticommutator requires two odd derivations") {}
};

struct GradingShift {
    int pureGhost = 0;
    int antiGhost = 0;
    int aux = 0;
};

/// A graded derivation given by its values on generators and extended by the
/// left-action Leibniz rule D(ab) = (Da)b + (-1)^{|D||a|} a(Db). Generators
/// absent from the value map are annihilated. Values are checked to be
/// homogeneous with the declared grading shift.
class Derivation {
  public:
    static Derivation make(const GeneratorTable& t, Parity parity, GradingShift shift,
                           std::map<GenId, SuperElement> values);

    const GeneratorTable& table() const { return *tab_; }
    Parity parity() const { return parity_; }
    const GradingShift& shift() const { return shift_; }
    SuperElement value(GenId g) const;
    const std::map<GenId, SuperElement>& values() const { return values_; }

  private:
    const GeneratorTable* tab_ = nullptr;
    Parity parity_ = Parity::Odd;
    GradingShift shift_;
    std::map<GenId, SuperElement> values_;
};

/// Unique left-Leibniz extension of the generator action.
SuperElement applyDerivation(const Derivation& D, const SuperElement& e);

/// Koszul-Tate differential: delta P_a = -G_a, delta z = delta eta = 0.
Derivation koszulTate(const ConstraintSystem& cs);

/// Longitudinal differential: d f = (X_a f) eta^a,
/// d eta^a = -1/2 C^a_{cb} eta^b eta^c, d P_a = eta^c C^b_{ac} P_b.
/// The antighost value's index placement is the one for which [delta,d] = 0
/// holds exactly under the left-action convention.
Derivation longitudinal(const ConstraintSystem& cs);

/// D1 D2 + D2 D1 for odd D1, D2: an even derivation, materialized as its
/// generator values plus a direct evaluator.
class EvenDerivationAction {
  public:
    EvenDerivationAction(Derivation d1, Derivation d2);
    const std::map<GenId, SuperElement>& values() const { return values_; }
    SuperElement operator()(const SuperElement& e) const;
    bool vanishesOnGenerators() const;

  private:
    Derivation d1_, d2_;
    std::map<GenId, SuperElement> values_;
};

EvenDerivationAction anticommutator(const Derivation& d1, const Derivation& d2);

/// g -> D(D(g)); D^2 = 0 on the whole algebra iff every entry vanishes.
std::map<GenId, SuperElement> nilpotencyDefect(const Derivation& D);

} // namespace brst
