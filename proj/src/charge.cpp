#include "brst/charge.hpp"

#include <algorithm>
#include <functional>

namespace brst {

namespace {

// all k-subsets of ids, ascending
void subsets(const std::vector<GenId>& ids, int k, std::vector<std::vector<GenId>>& out) {
    std::vector<GenId> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < ids.size(); ++i) {
            cur.push_back(ids[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// ghost-sector monomials with pureGhost = nEta, antiGhost = nP (level-0 only)
std::vector<Monomial> ghostMonomials(const GeneratorTable& t, int nEta, int nP) {
    std::vector<std::vector<GenId>> etas, ps;
    subsets(t.ghosts(0), nEta, etas);
    subsets(t.antighosts(), nP, ps);
    std::vector<Monomial> out;
    for (const auto& pp : ps)
        for (const auto& ee : etas) {
            Monomial m;
            m.odds = pp; // antighosts precede ghosts in the global order
            m.odds.insert(m.odds.end(), ee.begin(), ee.end());
            out.push_back(std::move(m));
        }
    return out;
}

} // namespace

const SuperElement& BRSTCharge::term(int k) const {
    if (k < 0 || k > topOrder()) throw OrderOutOfRange();
    return terms_[size_t(k)];
}

BRSTCharge buildCharge(const ConstraintSystem& cs, int maxOrder, int zDegreeBound) {
    if (!verifyFirstClass(cs).pass) throw NotFirstClass();
    const GeneratorTable& t = cs.table();

    BRSTCharge ch;
    SuperElement omega0(t);
    for (int a = 0; a < cs.count(); ++a)
        omega0 = omega0 + SuperElement::generator(t, t.ghost(a + 1)) * cs.constraint(a);
    ch.terms_.push_back(omega0);
    ch.total_ = omega0;

    // Omega_1 comes from the declared structure functions, 1/2 C^f_{ab} P_f eta^a eta^b,
    // with the sign fixed so the antighost-0 part of [., Omega] is the
    // longitudinal action for these C; only the higher orders are solved.
    SuperElement omega1(t);
    for (int a = 0; a < cs.count(); ++a)
        for (int b = 0; b < cs.count(); ++b)
            for (int f = 0; f < cs.count(); ++f) {
                const SuperElement& C = cs.structure(a, b, f);
                if (C.isZero()) continue;
                omega1 = omega1 + C * rational(1, 2) *
                             SuperElement::generator(t, t.antighost(f + 1)) *
                             SuperElement::generator(t, t.ghost(a + 1)) *
                             SuperElement::generator(t, t.ghost(b + 1));
            }
    if (!omega1.isZero()) {
        ch.terms_.push_back(omega1);
        ch.total_ = ch.total_ + omega1;
    }

    auto zmonos = coordinateMonomials(t, zDegreeBound);

    for (int k = 1; k < maxOrder; ++k) {
        SuperElement master = extendedBracket(cs.space(), ch.total_, ch.total_);
        if (master.isZero()) break; // series truncated
        SuperElement Rk = gradedPart(master, Grading::AntiGhost, k) * rational(1, 2);
        if (Rk.isZero()) continue;

        // solve [Omega_{k+1}, Omega_0]|_{antigh k} = -R_k
        linalg::SpanSolver solver(1);
        std::vector<SuperElement> basis;
        auto gm = ghostMonomials(t, k + 2, k + 1);
        for (const auto& zm : zmonos)
            for (const auto& g : gm) {
                Monomial m = g;
                m.evens = zm.evens;
                SuperElement u = SuperElement::monomial(t, std::move(m), 1);
                solver.addColumn(
                    {gradedPart(extendedBracket(cs.space(), u, omega0), Grading::AntiGhost, k)});
                basis.push_back(std::move(u));
            }
        auto sol = solver.solveFor({-Rk});
        if (!sol)
            throw ObstructionNotInIdeal(
                "order-" + std::to_string(k) +
                " obstruction not cancellable within z-degree bound " +
                std::to_string(zDegreeBound));
        SuperElement omegaNext(t);
        for (size_t j = 0; j < basis.size(); ++j)
            if (!isZero((*sol)[j])) omegaNext = omegaNext + basis[j] * (*sol)[j];
        while (ch.topOrder() < k) ch.terms_.push_back(SuperElement(t));
        ch.terms_.push_back(omegaNext);
        ch.total_ = ch.total_ + omegaNext;
    }

    while (ch.topOrder() > 0 && ch.terms_.back().isZero()) ch.terms_.pop_back();
    ch.residual_ = extendedBracket(cs.space(), ch.total_, ch.total_);
    ch.certified_ = ch.residual_.isZero();
    return ch;
}

BRSTDifferential::BRSTDifferential(std::shared_ptr<const ConstraintSystem> cs, BRSTCharge charge)
    : cs_(std::move(cs)), charge_(std::move(charge)) {}

SuperElement BRSTDifferential::operator()(const SuperElement& e) const {
    return extendedBracket(cs_->space(), e, charge_.total());
}

SuperElement BRSTDifferential::applyShift(const SuperElement& e, int shift) const {
    SuperElement out(cs_->table());
    for (const auto& [deg, part] : grade(e, Grading::AntiGhost)) {
        SuperElement img = (*this)(part);
        out = out + gradedPart(img, Grading::AntiGhost, deg + shift);
    }
    return out;
}

Derivation BRSTDifferential::expansionTerm(int k) const {
    if (k < -1 || k > charge_.topOrder()) throw OrderOutOfRange();
    const GeneratorTable& t = cs_->table();
    std::map<GenId, SuperElement> vals;
    for (const auto& g : t.all()) {
        SuperElement v = applyShift(SuperElement::generator(t, g.id), k);
        if (!v.isZero()) vals[g.id] = std::move(v);
    }
    return Derivation::make(t, Parity::Odd, {k + 1, k, 0}, std::move(vals));
}

SuperElement brstApply(const BRSTDifferential& S, const SuperElement& e) { return S(e); }

SecondOrderFields secondOrderFields(const ConstraintSystem& cs, int zDegreeBound) {
    const GeneratorTable& t = cs.table();
    int M = cs.count();
    std::vector<SuperElement> G;
    for (int a = 0; a < M; ++a) G.push_back(cs.constraint(a));
    std::vector<VectorField> X;
    for (int a = 0; a < M; ++a) X.push_back(hamiltonianVectorField(cs, a));

    SecondOrderFields out;
    out.rho.assign(size_t(M), std::vector<std::vector<VectorField>>(
                                  size_t(M), std::vector<VectorField>(size_t(M), VectorField(t))));
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            VectorField defect = bracket(X[size_t(i)], X[size_t(j)]);
            for (int k = 0; k < M; ++k)
                defect = defect - X[size_t(k)].scaled(cs.structure(i, j, k));
            for (GenId lam : t.coordinates()) {
                SuperElement comp = defect.component(lam);
                if (comp.isZero()) continue;
                auto h = idealMembership(comp, G, zDegreeBound);
                if (!h)
                    throw ObstructionNotInIdeal("closure defect component not in the constraint "
                                                "ideal within the degree bound");
                for (int c = 0; c < M; ++c) {
                    if ((*h)[size_t(c)].isZero()) continue;
                    out.rho[size_t(i)][size_t(j)][size_t(c)].setComponent(
                        lam, out.rho[size_t(i)][size_t(j)][size_t(c)].component(lam) + (*h)[size_t(c)]);
                }
            }
            for (int c = 0; c < M; ++c)
                out.rho[size_t(j)][size_t(i)][size_t(c)] = -out.rho[size_t(i)][size_t(j)][size_t(c)];
        }
    return out;
}

Derivation solveS1(const ConstraintSystem& cs, const Derivation& d, int zDegreeBound) {
    const GeneratorTable& t = cs.table();
    int M = cs.count();
    auto delta = koszulTate(cs);
    auto so = secondOrderFields(cs, zDegreeBound);

    std::map<GenId, SuperElement> vals;

    // s_1 f = -1/2 rho^c_{ij}(f) eta^i eta^j P_c
    for (GenId z : t.coordinates()) {
        SuperElement v(t);
        SuperElement zf = SuperElement::generator(t, z);
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < M; ++j)
                for (int c = 0; c < M; ++c) {
                    SuperElement r = so.rho[size_t(i)][size_t(j)][size_t(c)](zf);
                    if (r.isZero()) continue;
                    v = v - r * rational(1, 2) * SuperElement::generator(t, t.ghost(i + 1)) *
                            SuperElement::generator(t, t.ghost(j + 1)) *
                            SuperElement::generator(t, t.antighost(c + 1));
                }
        if (!v.isZero()) vals[z] = std::move(v);
    }

    // remaining values solve delta(s_1 g) = rhs(g) over the monomial basis
    // with the gradings of g shifted by (+2, +1); free variables stay zero,
    // so s_1 eta^a = 0 comes out whenever d^2 eta^a = 0 (the paper's gauge)
    auto zmonos = coordinateMonomials(t, zDegreeBound);
    auto kSubsets = [](const std::vector<GenId>& ids, int k) {
        std::vector<std::vector<GenId>> out;
        std::vector<GenId> cur;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (int(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (size_t i = start; i < ids.size(); ++i) {
                cur.push_back(ids[i]);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };

    auto solveValue = [&](int nEta, int nP, const SuperElement& target, const std::string& what) {
        SuperElement v(t);
        if (target.isZero()) return v;
        linalg::SpanSolver solver(1);
        std::vector<SuperElement> basis;
        auto etas = kSubsets(t.ghosts(0), nEta);
        auto ps = kSubsets(t.antighosts(), nP);
        for (const auto& zm : zmonos)
            for (const auto& pp : ps)
                for (const auto& ee : etas) {
                    Monomial m;
                    m.evens = zm.evens;
                    m.odds = pp;
                    m.odds.insert(m.odds.end(), ee.begin(), ee.end());
                    SuperElement u = SuperElement::monomial(t, std::move(m), 1);
                    solver.addColumn({applyDerivation(delta, u)});
                    basis.push_back(std::move(u));
                }
        auto sol = solver.solveFor({target});
        if (!sol)
            throw ObstructionNotInIdeal("s_1 " + what +
                                        " equation has no solution within the degree bound");
        for (size_t j = 0; j < basis.size(); ++j)
            if (!isZero((*sol)[j])) v = v + basis[j] * (*sol)[j];
        return v;
    };

    // s_1 eta^a from delta(s_1 eta^a) = -d^2 eta^a
    for (int a = 0; a < M; ++a) {
        GenId ea = t.ghost(a + 1);
        SuperElement d2e = applyDerivation(d, applyDerivation(d, SuperElement::generator(t, ea)));
        SuperElement v = solveValue(3, 1, -d2e, "eta" + std::to_string(a + 1));
        if (!v.isZero()) vals[ea] = std::move(v);
    }

    // s_1 P_a from delta(s_1 P_a) = -d^2 P_a + s_1(G_a)
    for (int a = 0; a < M; ++a) {
        GenId Pa = t.antighost(a + 1);
        SuperElement d2P = applyDerivation(d, applyDerivation(d, SuperElement::generator(t, Pa)));
        SuperElement s1Ga(t);
        {
            const SuperElement& Ga = cs.constraint(a);
            for (int i = 0; i < M; ++i)
                for (int j = 0; j < M; ++j)
                    for (int c = 0; c < M; ++c) {
                        SuperElement r = so.rho[size_t(i)][size_t(j)][size_t(c)](Ga);
                        if (r.isZero()) continue;
                        s1Ga = s1Ga - r * rational(1, 2) *
                                   SuperElement::generator(t, t.ghost(i + 1)) *
                                   SuperElement::generator(t, t.ghost(j + 1)) *
                                   SuperElement::generator(t, t.antighost(c + 1));
                    }
        }
        SuperElement v = solveValue(2, 2, -d2P + s1Ga, "P" + std::to_string(a + 1));
        if (!v.isZero()) vals[Pa] = std::move(v);
    }

    return Derivation::make(t, Parity::Odd, {2, 1, 0}, std::move(vals));
}

std::map<GenId, SuperElement> s1OnAntighosts(const ConstraintSystem& cs, const Derivation& d,
                                             int zDegreeBound) {
    auto s1 = solveS1(cs, d, zDegreeBound);
    std::map<GenId, SuperElement> out;
    for (int a = 0; a < cs.count(); ++a) {
        GenId Pa = cs.table().antighost(a + 1);
        out[Pa] = s1.value(Pa);
    }
    return out;
}

StructureIdentitiesReport structureIdentities(const BRSTDifferential& S, int zDegreeBound) {
    const ConstraintSystem& cs = S.system();
    const GeneratorTable& t = cs.table();
    StructureIdentitiesReport rep;

    auto push = [&](std::vector<StructureIdentitiesReport::Defect>& where, bool& flag,
                    const std::string& id, const Generator& g, SuperElement v) {
        if (!v.isZero()) flag = false;
        where.push_back({id, g.name, std::move(v)});
    };

    // graded pieces of S: shift-graded components of S^2 = 0
    for (const auto& g : t.all()) {
        SuperElement e = SuperElement::generator(t, g.id);
        auto piece = [&](int a, int b) { return S.applyShift(S.applyShift(e, b), a); };
        push(rep.gradedRoute, rep.gradedPass, "delta^2", g, piece(-1, -1));
        push(rep.gradedRoute, rep.gradedPass, "[delta,d]", g, piece(-1, 0) + piece(0, -1));
        push(rep.gradedRoute, rep.gradedPass, "d^2+[delta,s1]", g,
             piece(0, 0) + piece(-1, 1) + piece(1, -1));
    }

    // constructed differentials under the left action
    auto delta = koszulTate(cs);
    auto d = longitudinal(cs);
    auto s1 = solveS1(cs, d, zDegreeBound);
    for (const auto& g : t.all()) {
        SuperElement e = SuperElement::generator(t, g.id);
        auto D2 = [&](const Derivation& A, const Derivation& B) {
            return applyDerivation(A, applyDerivation(B, e));
        };
        push(rep.leftRoute, rep.leftPass, "delta^2", g, D2(delta, delta));
        push(rep.leftRoute, rep.leftPass, "[delta,d]", g, D2(delta, d) + D2(d, delta));
        push(rep.leftRoute, rep.leftPass, "d^2+[delta,s1]", g,
             D2(d, d) + D2(delta, s1) + D2(s1, delta));
    }
    return rep;
}

} // namespace brst
