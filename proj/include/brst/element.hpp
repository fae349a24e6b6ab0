#pragma once

#include "brst/generator.hpp"
#include "brst/scalar.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace brst {

/// Canonical monomial: even generators as a sparse multidegree, odd
/// generators as a strictly ascending id list (odd squares vanish).
struct Monomial {
    std::vector<std::pair<GenId, uint32_t>> evens; // sorted by id, exp >= 1
    std::vector<GenId> odds;                       // strictly ascending

    bool isOne() const { return evens.empty() && odds.empty(); }
    auto operator<=>(const Monomial&) const = default;

    int pureGhost(const GeneratorTable& t) const;
    int antiGhost(const GeneratorTable& t) const;
    int aux(const GeneratorTable& t) const;
    int zDegree(const GeneratorTable& t) const;      // total degree in coordinates
    int ghostWordLength(const GeneratorTable& t) const; // degree in non-coordinates
    Parity parity(const GeneratorTable& t) const;
    int ghostNumber(const GeneratorTable& t) const { return pureGhost(t) - antiGhost(t); }
};

enum class Grading { PureGhost, AntiGhost, GhostNumber, Aux, Parity, ZDegree };

/// Element of the supercommutative algebra over Q, in canonical form:
/// a finite map monomial -> nonzero coefficient. Immutable value type;
/// two elements are equal iff the maps are equal.
class SuperElement {
  public:
    SuperElement() = default;
    explicit SuperElement(const GeneratorTable& t) : tab_(&t) {}

    static SuperElement zero(const GeneratorTable& t) { return SuperElement(t); }
    static SuperElement constant(const GeneratorTable& t, const Scalar& c);
    static SuperElement one(const GeneratorTable& t) { return constant(t, 1); }
    static SuperElement generator(const GeneratorTable& t, GenId g);
    static SuperElement monomial(const GeneratorTable& t, Monomial m, Scalar c);

    const GeneratorTable& table() const;
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const;

    SuperElement operator-() const;
    SuperElement operator+(const SuperElement& o) const;
    SuperElement operator-(const SuperElement& o) const;
    SuperElement operator*(const SuperElement& o) const;
    SuperElement operator*(const Scalar& c) const;
    bool operator==(const SuperElement& o) const { return terms_ == o.terms_; }

    /// Homogeneous parity if all monomials agree; nullopt otherwise.
    /// The zero element counts as even.
    std::optional<Parity> homogeneousParity() const;

    /// Value of one grading if homogeneous in it.
    std::optional<int> homogeneousDegree(Grading which) const;

    int maxZDegree() const;

    void addTerm(Monomial m, Scalar c); // used by builders; keeps canonical form

  private:
    const GeneratorTable* tab_ = nullptr;
    std::map<Monomial, Scalar> terms_;
};

inline SuperElement operator*(const Scalar& c, const SuperElement& e) { return e * c; }

/// Canonicalize a list of (coefficient, generator word) with Koszul signs.
SuperElement normalize(const GeneratorTable& t,
                       const std::vector<std::pair<Scalar, std::vector<GenId>>>& raw);

/// Convenience: coefficient * product of named generators.
SuperElement word(const GeneratorTable& t, const Scalar& c,
                  const std::vector<std::string>& names);

/// Graded left partial derivative with respect to one generator.
SuperElement leftDerivative(const SuperElement& e, GenId g);

/// Decomposition into homogeneous parts of one grading; parts sum to e.
std::map<int, SuperElement> grade(const SuperElement& e, Grading which);

/// Part of e in one homogeneous degree (empty part = zero element).
SuperElement gradedPart(const SuperElement& e, Grading which, int degree);

/// Bit-exact textual form (the CLI round-trip target): terms joined by
/// " + "/" - ", coefficients "p/q" with "/1" omitted, generators joined by
/// "*", "^" exponents on even generators only, odd generators in canonical
/// order. Deterministic term order.
std::string to_string(const SuperElement& e);

std::ostream& operator<<(std::ostream& os, const SuperElement& e);

} // namespace brst
