#pragma once

#include "brst/charge.hpp"
#include "brst/derivation.hpp"
#include "brst/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>

namespace brst::fixtures {

struct System {
    std::shared_ptr<GeneratorTable> table;
    PhaseSpace space;
    std::shared_ptr<ConstraintSystem> cs;

    const GeneratorTable& t() const { return *table; }
    SuperElement w(long num, long den, const std::vector<std::string>& names) const {
        return word(*table, rational(num, den), names);
    }
};

inline System makeSystem(int n, int M,
                         const std::function<std::vector<SuperElement>(const GeneratorTable&)>& gs,
                         const std::function<std::vector<std::vector<std::vector<SuperElement>>>(
                             const GeneratorTable&)>& cf) {
    System s;
    s.table = std::make_shared<GeneratorTable>(GeneratorTable::extendedPhaseSpace(n, M));
    s.space = PhaseSpace::canonical(n);
    s.cs = std::make_shared<ConstraintSystem>(s.space, s.table, gs(*s.table), cf(*s.table));
    return s;
}

inline std::vector<std::vector<std::vector<SuperElement>>> zeroStructure(const GeneratorTable& t,
                                                                         int M) {
    return std::vector<std::vector<std::vector<SuperElement>>>(
        size_t(M), std::vector<std::vector<SuperElement>>(
                       size_t(M), std::vector<SuperElement>(size_t(M), SuperElement(t))));
}

/// R^2, G = (p1). Abelian, M = 1.
inline System abelianR2() {
    static const System cached = makeSystem(
        1, 1, [](const GeneratorTable& t) { return std::vector{word(t, 1, {"p1"})}; },
        [](const GeneratorTable& t) { return zeroStructure(t, 1); });
    return cached;
}

/// R^4, G = (p1). Abelian, M = 1; observables are polynomials in x2, p2.
inline System abelianR4() {
    static const System cached = makeSystem(
        2, 1, [](const GeneratorTable& t) { return std::vector{word(t, 1, {"p1"})}; },
        [](const GeneratorTable& t) { return zeroStructure(t, 1); });
    return cached;
}

/// R^4, G = (p1, p2). Abelian, M = 2.
inline System abelianR4M2() {
    static const System cached = makeSystem(
        2, 2,
        [](const GeneratorTable& t) {
            return std::vector{word(t, 1, {"p1"}), word(t, 1, {"p2"})};
        },
        [](const GeneratorTable& t) { return zeroStructure(t, 2); });
    return cached;
}

/// Levi-Civita symbol, indices 1..3.
inline int epsilon3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    if ((a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
        (a == 3 && b == 1 && c == 2))
        return 1;
    return -1;
}

/// so(3) on R^6: G_a = eps_{abc} x^b p^c, C^c_{ab} = eps_{abc}.
inline System so3() {
    auto lev = epsilon3;
    static const System cached = makeSystem(
        3, 3,
        [&](const GeneratorTable& t) {
            std::vector<SuperElement> G;
            for (int a = 1; a <= 3; ++a) {
                SuperElement g(t);
                for (int b = 1; b <= 3; ++b)
                    for (int c = 1; c <= 3; ++c)
                        if (int e = lev(a, b, c); e != 0)
                            g = g + word(t, e, {"x" + std::to_string(b), "p" + std::to_string(c)});
                G.push_back(g);
            }
            return G;
        },
        [&](const GeneratorTable& t) {
            auto C = zeroStructure(t, 3);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    for (int c = 0; c < 3; ++c)
                        if (int e = lev(a + 1, b + 1, c + 1); e != 0)
                            C[size_t(a)][size_t(b)][size_t(c)] = SuperElement::constant(t, e);
            return C;
        });
    return cached;
}

/// Open algebra on R^6 with a genuinely field-dependent structure function:
/// G = (p1, p2 + x1^2 p3, p3), [G_1,G_2] = -2 x1 G_3, other brackets zero.
inline System openAlgebra() {
    static const System cached = makeSystem(
        3, 3,
        [](const GeneratorTable& t) {
            return std::vector{word(t, 1, {"p1"}),
                               word(t, 1, {"p2"}) + word(t, 1, {"x1", "x1", "p3"}),
                               word(t, 1, {"p3"})};
        },
        [](const GeneratorTable& t) {
            auto C = zeroStructure(t, 3);
            C[0][1][2] = word(t, -2, {"x1"});
            C[1][0][2] = word(t, 2, {"x1"});
            return C;
        });
    return cached;
}

/// Rank-two open presentation on R^6: abelian constraints G = (p1, p2, p3)
/// with the nonzero structure-function representative C^c_{ab} = A^{cd}_{ab} G_d
/// (valid since A is antisymmetric in (c,d)). The gauge algebra closes only
/// on shell, the antisymmetrized Jacobi defect of C survives off shell
/// (d^2 eta != 0), and the charge needs a nonzero order-2 term.
inline System openRank2() {
    static const System cached = makeSystem(
        3, 3,
        [](const GeneratorTable& t) {
            return std::vector{word(t, 1, {"p1"}), word(t, 1, {"p2"}), word(t, 1, {"p3"})};
        },
        [](const GeneratorTable& t) {
            auto C = zeroStructure(t, 3);
            auto set = [&](int a, int b, int c, SuperElement v) {
                C[size_t(a)][size_t(b)][size_t(c)] = v;
                C[size_t(b)][size_t(a)][size_t(c)] = -v;
            };
            set(0, 1, 0, word(t, 1, {"p2"}));
            set(0, 1, 1, word(t, -1, {"p1"}));
            set(0, 2, 0, word(t, 1, {"p3"}));
            set(0, 2, 2, word(t, -1, {"p1"}));
            return C;
        });
    return cached;
}

/// Memoized BRST differential for a fixture (maxOrder 3, zDegreeBound 4).
inline const BRSTDifferential& cachedS(const System& sys) {
    static std::map<const ConstraintSystem*, std::shared_ptr<BRSTDifferential>> cache;
    auto it = cache.find(sys.cs.get());
    if (it == cache.end())
        it = cache.emplace(sys.cs.get(), std::make_shared<BRSTDifferential>(
                                             sys.cs, buildCharge(*sys.cs, 3, 4)))
                 .first;
    return *it->second;
}

/// Seeded random coordinate polynomial (degree <= maxDeg, <= nTerms terms).
inline SuperElement randomPolynomial(const GeneratorTable& t, std::mt19937_64& rng, int maxDeg,
                                     int nTerms) {
    auto coords = t.coordinates();
    std::uniform_int_distribution<int> degd(0, maxDeg), coefd(-4, 4), pick(0, int(coords.size()) - 1);
    SuperElement out(t);
    for (int k = 0; k < nTerms; ++k) {
        int deg = degd(rng);
        std::vector<GenId> seq;
        for (int i = 0; i < deg; ++i) seq.push_back(coords[size_t(pick(rng))]);
        long c = coefd(rng);
        if (c == 0) c = 1;
        out = out + normalize(t, {{rational(c), seq}});
    }
    return out;
}

/// Seeded random element, optionally parity-homogeneous.
inline SuperElement randomElement(const GeneratorTable& t, std::mt19937_64& rng, int maxDeg,
                                  int nTerms, std::optional<Parity> parity = std::nullopt) {
    std::vector<GenId> odds, evens;
    for (const auto& g : t.all()) (g.odd() ? odds : evens).push_back(g.id);
    std::uniform_int_distribution<int> degd(0, maxDeg), coefd(-4, 4);
    std::uniform_int_distribution<size_t> picke(0, evens.empty() ? 0 : evens.size() - 1);
    std::uniform_int_distribution<int> oddCount(0, int(std::min<size_t>(odds.size(), 3)));

    SuperElement out(t);
    for (int k = 0; k < nTerms; ++k) {
        std::vector<GenId> seq;
        int deg = degd(rng);
        for (int i = 0; i < deg && !evens.empty(); ++i) seq.push_back(evens[picke(rng)]);
        int no = oddCount(rng);
        if (parity) no = (no / 2) * 2 + int(*parity); // force parity
        std::shuffle(odds.begin(), odds.end(), rng);
        for (int i = 0; i < no && i < int(odds.size()); ++i) seq.push_back(odds[size_t(i)]);
        if (parity && int(odds.size()) < no) continue;
        long c = coefd(rng);
        if (c == 0) c = 2;
        out = out + normalize(t, {{rational(c), seq}});
    }
    if (parity) out = gradedPart(out, Grading::Parity, int(*parity));
    return out;
}

} // namespace brst::fixtures
