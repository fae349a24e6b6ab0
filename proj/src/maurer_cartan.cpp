#include "brst/maurer_cartan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace brst {

namespace {

void kSubsetsOf(int M, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= M; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

// split a monomial into its coordinate part and ghost-word part
std::pair<Monomial, Monomial> splitMonomial(const GeneratorTable& t, const Monomial& m) {
    Monomial z, g;
    for (auto [id, e] : m.evens)
        (t.gen(id).kind == GenKind::Coordinate ? z.evens : g.evens).push_back({id, e});
    g.odds = m.odds;
    return {z, g};
}

} // namespace

std::string MultiGhostIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < ghosts.size(); ++i) os << (i ? " " : "") << ghosts[i];
    os << ";";
    for (size_t i = 0; i < antighosts.size(); ++i) os << (i ? " " : " ") << antighosts[i];
    os << ")";
    return os.str();
}

SuperElement multiGhostElement(const GeneratorTable& t, const MultiGhostIndex& I) {
    std::vector<GenId> wordIds;
    for (int b : I.ghosts) wordIds.push_back(t.ghost(b));
    for (auto it = I.antighosts.rbegin(); it != I.antighosts.rend(); ++it)
        wordIds.push_back(t.antighost(*it));
    return normalize(t, {{Scalar(1), wordIds}});
}

std::vector<std::pair<MultiGhostIndex, SuperElement>>
enumerateMultiGhosts(const GeneratorTable& t, int maxOrder) {
    int M = t.constraintCount();
    std::vector<std::pair<MultiGhostIndex, SuperElement>> out;
    for (int p = 0; p <= maxOrder; ++p) {
        if (p + 1 > M || p > M) break;
        std::vector<std::vector<int>> es, as;
        kSubsetsOf(M, p + 1, es);
        kSubsetsOf(M, p, as);
        for (const auto& e : es)
            for (const auto& a : as) {
                MultiGhostIndex I{e, a};
                SuperElement el = multiGhostElement(t, I);
                out.push_back({std::move(I), std::move(el)});
            }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

const VectorField& MCData::rhoOf(const MultiGhostIndex& I) const {
    auto it = rho.find(I);
    if (it == rho.end()) throw Error("no rho for index " + I.str());
    return it->second;
}

SuperElement MCData::structureOf(const GeneratorTable& t, const MultiGhostIndex& K,
                                 const MultiGhostIndex& I, const MultiGhostIndex& J) const {
    if (J < I) return -structureOf(t, K, J, I);
    if (I == J) return SuperElement(t);
    auto it = structure.find({K, I, J});
    return it == structure.end() ? SuperElement(t) : it->second;
}

std::map<MultiGhostIndex, VectorField> extractRhoFromOperator(
    const GeneratorTable& t, int maxOrder,
    const std::function<SuperElement(const SuperElement&)>& S) {
    auto basis = enumerateMultiGhosts(t, maxOrder);
    // ghost monomial -> (index position, sign)
    std::map<Monomial, std::pair<size_t, int>> lookup;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& el = basis[i].second;
        const auto& [mono, coeff] = *el.terms().begin();
        lookup[mono] = {i, sgn(coeff)};
    }

    std::map<MultiGhostIndex, VectorField> rho;
    for (const auto& [I, el] : basis) rho[I] = VectorField(t);

    for (GenId z : t.coordinates()) {
        SuperElement img = S(SuperElement::generator(t, z));
        for (const auto& [m, c] : img.terms()) {
            auto [zm, gm] = splitMonomial(t, m);
            auto it = lookup.find(gm);
            if (it == lookup.end()) throw NotInMultiGhostSpan();
            const auto& [pos, sign] = it->second;
            const MultiGhostIndex& I = basis[pos].first;
            VectorField& X = rho[I];
            X.setComponent(z, X.component(z) +
                                  SuperElement::monomial(t, zm, sign > 0 ? c : -c));
        }
    }
    return rho;
}

std::map<MultiGhostIndex, VectorField> extractRho(const BRSTDifferential& S) {
    return extractRhoFromOperator(S.table(), S.charge().topOrder(),
                                  [&](const SuperElement& e) { return S(e); });
}

std::map<std::tuple<MultiGhostIndex, MultiGhostIndex, MultiGhostIndex>, SuperElement>
extractStructure(const BRSTDifferential& S, int maxOrder) {
    const GeneratorTable& t = S.table();
    // pairs can reach order 2*maxOrder - 1 through the bracket
    auto basis = enumerateMultiGhosts(t, 2 * maxOrder + 1);

    // product monomial -> first pair (I<J) in index order with that product
    struct ProductHit {
        size_t i, j;
        int sign;
    };
    std::map<Monomial, ProductHit> products;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            SuperElement prod = basis[i].second * basis[j].second;
            if (prod.isZero()) continue;
            const auto& [mono, coeff] = *prod.terms().begin();
            auto [zm, gm] = splitMonomial(t, mono);
            if (!products.count(gm)) products[gm] = {i, j, sgn(coeff)};
        }

    std::map<std::tuple<MultiGhostIndex, MultiGhostIndex, MultiGhostIndex>, SuperElement> out;
    for (const auto& [K, elK] : enumerateMultiGhosts(t, maxOrder)) {
        SuperElement img = S(elK);
        // group image terms by ghost monomial
        std::map<Monomial, SuperElement> byGhost;
        for (const auto& [m, c] : img.terms()) {
            auto [zm, gm] = splitMonomial(t, m);
            auto it = byGhost.find(gm);
            if (it == byGhost.end()) it = byGhost.emplace(gm, SuperElement(t)).first;
            it->second.addTerm(zm, c);
        }
        for (auto& [gm, poly] : byGhost) {
            auto hit = products.find(gm);
            if (hit == products.end()) throw NotInProductSpan();
            const auto& [i, j, sign] = hit->second;
            // S w^K = sum c_{IJ} w^I w^J with the whole coefficient assigned
            // to the first product in index order; stored C^K_IJ = -c_{IJ}
            SuperElement c = sign > 0 ? poly : -poly;
            out[{K, basis[i].first, basis[j].first}] = -c;
        }
    }
    return out;
}

MCData extractMC(const BRSTDifferential& S) {
    MCData mc;
    for (auto& [I, el] : enumerateMultiGhosts(S.table(), S.charge().topOrder()))
        mc.indices.push_back(I);
    mc.rho = extractRho(S);
    mc.structure = extractStructure(S, S.charge().topOrder());
    return mc;
}

SuperElement mcApplyToFunction(const GeneratorTable& t, const MCData& mc, const SuperElement& f) {
    SuperElement out(t);
    for (const auto& [I, X] : mc.rho) out = out + X(f) * multiGhostElement(t, I);
    return out;
}

SuperElement mcApplyToMultiGhost(const GeneratorTable& t, const MCData& mc,
                                 const MultiGhostIndex& K) {
    SuperElement out(t);
    for (const auto& [key, c] : mc.structure) {
        const auto& [Kk, I, J] = key;
        if (!(Kk == K)) continue;
        // -1/2 ( C^K_IJ w^I w^J + C^K_JI w^J w^I ) = -C^K_IJ w^I w^J for I<J
        out = out - c * multiGhostElement(t, I) * multiGhostElement(t, J);
    }
    return out;
}

LemmaReport lemmaCheck(const BRSTDifferential& S, const MCData& mc,
                       const std::vector<SuperElement>& inputs) {
    const GeneratorTable& t = S.table();
    LemmaReport rep;
    for (const auto& f : inputs) {
        SuperElement s2 = S(S(f));
        SuperElement rhs(t);
        for (const auto& J : mc.indices)
            for (const auto& I : mc.indices) {
                SuperElement coeff = bracket(mc.rhoOf(J), mc.rhoOf(I))(f);
                for (const auto& K : mc.indices) {
                    SuperElement c = mc.structureOf(t, K, J, I);
                    if (c.isZero()) continue;
                    coeff = coeff - c * mc.rhoOf(K)(f);
                }
                if (coeff.isZero()) continue;
                rhs = rhs + coeff * rational(1, 2) * multiGhostElement(t, J) *
                          multiGhostElement(t, I);
            }
        SuperElement residual = rhs - s2;
        if (!residual.isZero() || !s2.isZero()) rep.pass = false;
        rep.entries.push_back({to_string(f), std::move(residual), std::move(s2)});
    }
    return rep;
}

SuperElement mcSquareOnMultiGhost(const GeneratorTable& t, const MCData& mc,
                                  const MultiGhostIndex& K) {
    // S(S w^K) assembled from MCData alone, with the product rule of the
    // bracket differential: S(u v) = u S(v) + (-1)^{|v|} S(u) v
    SuperElement out(t);
    for (const auto& [key, c] : mc.structure) {
        const auto& [Kk, I, J] = key;
        if (!(Kk == K)) continue;
        SuperElement wI = multiGhostElement(t, I), wJ = multiGhostElement(t, J);
        // term -c * wI * wJ : S acts as
        // -[ S(c) wI wJ + c wI S(wJ) - c S(wI) wJ ]
        out = out - mcApplyToFunction(t, mc, c) * wI * wJ;
        out = out - c * wI * mcApplyToMultiGhost(t, mc, J);
        out = out + c * mcApplyToMultiGhost(t, mc, I) * wJ;
    }
    return out;
}

LieClosureReport lieClosure(const GeneratorTable& t, const MCData& mc, int zDegreeBound) {
    LieClosureReport rep;
    auto zmonos = coordinateMonomials(t, zDegreeBound);
    auto coords = t.coordinates();

    linalg::SpanSolver solver(coords.size());
    std::vector<MultiGhostIndex> columnIndex;
    for (const auto& K : mc.indices)
        for (const auto& zm : zmonos) {
            std::vector<SuperElement> col;
            SuperElement scale = SuperElement::monomial(t, zm, 1);
            for (GenId z : coords) col.push_back(scale * mc.rhoOf(K).component(z));
            solver.addColumn(std::move(col));
            columnIndex.push_back(K);
        }

    for (size_t a = 0; a < mc.indices.size(); ++a)
        for (size_t b = a + 1; b < mc.indices.size(); ++b) {
            const auto& I = mc.indices[a];
            const auto& J = mc.indices[b];
            VectorField comm = bracket(mc.rhoOf(I), mc.rhoOf(J));
            std::vector<SuperElement> target;
            for (GenId z : coords) target.push_back(comm.component(z));
            bool solvable = solver.solveFor(target).has_value();

            VectorField viaC(t);
            for (const auto& K : mc.indices) {
                SuperElement c = mc.structureOf(t, K, I, J);
                if (c.isZero()) continue;
                viaC = viaC + mc.rhoOf(K).scaled(c);
            }
            bool valid = (comm - viaC).isZero();
            if (!solvable) rep.pass = false;
            rep.entries.push_back({I, J, solvable, valid});
        }
    return rep;
}

GaugeClosureReport gaugeClosure(const ConstraintSystem& cs, const MCData& mc, int zDegreeBound,
                                unsigned seed) {
    const GeneratorTable& t = cs.table();
    int M = cs.count();
    GaugeClosureReport rep;
    rep.fields = secondOrderFields(cs, zDegreeBound);

    std::vector<VectorField> X;
    for (int a = 0; a < M; ++a) X.push_back(hamiltonianVectorField(cs, a));
    std::vector<SuperElement> G;
    for (int a = 0; a < M; ++a) G.push_back(cs.constraint(a));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto randomPoly = [&]() {
        SuperElement f(t);
        auto monos = coordinateMonomials(t, 2);
        for (int k = 0; k < 3; ++k) {
            auto& m = monos[size_t(rng() % monos.size())];
            f = f + SuperElement::monomial(t, m, rational(coef(rng)));
        }
        return f;
    };

    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            GaugeClosureReport::Entry e;
            e.i = i;
            e.j = j;
            VectorField defect = bracket(X[size_t(i)], X[size_t(j)]);
            for (int k = 0; k < M; ++k) defect = defect - X[size_t(k)].scaled(cs.structure(i, j, k));
            VectorField viaRho(t);
            for (int c = 0; c < M; ++c)
                viaRho = viaRho + rep.fields.rho[size_t(i)][size_t(j)][size_t(c)].scaled(G[size_t(c)]);
            e.defectInIdeal = (defect - viaRho).isZero();

            e.rhoIsDerivation = true;
            for (int c = 0; c < M; ++c) {
                const VectorField& r = rep.fields.rho[size_t(i)][size_t(j)][size_t(c)];
                for (int trial = 0; trial < 5; ++trial) {
                    SuperElement f = randomPoly(), g = randomPoly();
                    if (!(r(f * g) - r(f) * g - f * r(g)).isZero()) e.rhoIsDerivation = false;
                }
            }

            // agreement with the order-1 multi-ghost fields: rho_{(ij;c)} = rho^c_{ij}
            e.matchesOrderOne = true;
            for (int c = 0; c < M; ++c) {
                MultiGhostIndex I{{i + 1, j + 1}, {c + 1}};
                auto it = mc.rho.find(I);
                VectorField lhs = it == mc.rho.end() ? VectorField(t) : it->second;
                if (!(lhs == rep.fields.rho[size_t(i)][size_t(j)][size_t(c)]))
                    e.matchesOrderOne = false;
            }
            if (!e.defectInIdeal || !e.rhoIsDerivation) rep.pass = false;
            rep.entries.push_back(e);
        }

    auto closure = lieClosure(t, mc, zDegreeBound);
    rep.theorem2Closed = closure.pass;
    if (!closure.pass) rep.pass = false;
    return rep;
}

} // namespace brst
