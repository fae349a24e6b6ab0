#include "brst/symplectic.hpp"

#include <algorithm>

namespace brst {

PhaseSpace PhaseSpace::canonical(int n) {
    PhaseSpace ps;
    ps.n = n;
    int d = 2 * n;
    ps.omega.assign(size_t(d), std::vector<Scalar>(size_t(d), Scalar(0)));
    ps.sigma.assign(size_t(d), std::vector<Scalar>(size_t(d), Scalar(0)));
    for (int i = 0; i < n; ++i) {
        // sigma^{x^i p_i} = 1 so that [x^i, p_i] = 1
        ps.sigma[size_t(i)][size_t(n + i)] = 1;
        ps.sigma[size_t(n + i)][size_t(i)] = -1;
        ps.omega[size_t(i)][size_t(n + i)] = -1;
        ps.omega[size_t(n + i)][size_t(i)] = 1;
    }
    return ps;
}

PhaseSpace PhaseSpace::fromOmega(int n, linalg::QMatrix omega) {
    int d = 2 * n;
    if (int(omega.size()) != d) throw Error("omega must be 2n x 2n");
    for (int i = 0; i < d; ++i) {
        if (int(omega[size_t(i)].size()) != d) throw Error("omega must be 2n x 2n");
        for (int j = 0; j < d; ++j)
            if (!(omega[size_t(i)][size_t(j)] == -omega[size_t(j)][size_t(i)]))
                throw Error("omega must be antisymmetric");
    }
    // invert via RREF on [omega | I]
    linalg::QMatrix aug(size_t(d), std::vector<Scalar>(size_t(2 * d), Scalar(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) aug[size_t(i)][size_t(j)] = omega[size_t(i)][size_t(j)];
        aug[size_t(i)][size_t(d + i)] = 1;
    }
    auto pivots = linalg::rref(aug);
    if (int(pivots.size()) != d || pivots.back() != d - 1) throw Error("omega is singular");
    PhaseSpace ps;
    ps.n = n;
    ps.omega = std::move(omega);
    ps.sigma.assign(size_t(d), std::vector<Scalar>(size_t(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ps.sigma[size_t(i)][size_t(j)] = aug[size_t(i)][size_t(d + j)];
    return ps;
}

const GeneratorTable& VectorField::table() const {
    if (!tab_) throw Error("vector field has no generator table");
    return *tab_;
}

SuperElement VectorField::component(GenId coord) const {
    auto it = comps_.find(coord);
    return it == comps_.end() ? SuperElement(table()) : it->second;
}

void VectorField::setComponent(GenId coord, SuperElement e) {
    if (e.isZero())
        comps_.erase(coord);
    else
        comps_[coord] = std::move(e);
}

bool VectorField::isZero() const {
    for (const auto& [id, c] : comps_)
        if (!c.isZero()) return false;
    return true;
}

SuperElement VectorField::operator()(const SuperElement& f) const {
    SuperElement out(table());
    for (const auto& [id, x] : comps_) out = out + x * leftDerivative(f, id);
    return out;
}

VectorField VectorField::operator+(const VectorField& o) const {
    VectorField out = *this;
    if (!out.tab_) out.tab_ = o.tab_;
    for (const auto& [id, c] : o.comps_) out.setComponent(id, out.component(id) + c);
    return out;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::operator-() const {
    VectorField out = *this;
    for (auto& [id, c] : out.comps_) c = -c;
    return out;
}

VectorField VectorField::scaled(const SuperElement& f) const {
    VectorField out(table());
    for (const auto& [id, c] : comps_) out.setComponent(id, f * c);
    return out;
}

VectorField bracket(const VectorField& a, const VectorField& b) {
    const GeneratorTable& t = a.table();
    VectorField out(t);
    for (GenId lam : t.coordinates()) {
        SuperElement comp = b(a.component(lam)) - a(b.component(lam));
        out.setComponent(lam, std::move(comp));
    }
    return out;
}

namespace {

bool coordinateOnly(const SuperElement& e) {
    const GeneratorTable& t = e.table();
    for (const auto& [m, c] : e.terms()) {
        if (!m.odds.empty()) return false;
        for (auto [id, exp] : m.evens)
            if (t.gen(id).kind != GenKind::Coordinate) return false;
    }
    return true;
}

SuperElement sigmaPart(const PhaseSpace& ps, const SuperElement& a, const SuperElement& b) {
    const GeneratorTable& t = a.table();
    SuperElement out(t);
    int d = ps.dim();
    for (int l = 0; l < d; ++l) {
        SuperElement da = leftDerivative(a, GenId(l));
        if (da.isZero()) continue;
        for (int m = 0; m < d; ++m) {
            const Scalar& s = ps.sigma[size_t(l)][size_t(m)];
            if (isZero(s)) continue;
            SuperElement db = leftDerivative(b, GenId(m));
            if (db.isZero()) continue;
            out = out + (da * db) * s;
        }
    }
    return out;
}

} // namespace

SuperElement poissonBracket(const PhaseSpace& ps, const SuperElement& f, const SuperElement& g) {
    if (!coordinateOnly(f) || !coordinateOnly(g)) throw GhostInBracket();
    return sigmaPart(ps, f, g);
}

SuperElement extendedBracket(const PhaseSpace& ps, const SuperElement& a, const SuperElement& b) {
    const GeneratorTable& t = a.table();
    SuperElement out = sigmaPart(ps, a, b);

    // ghost pairing: [A,B] += (-1)^{|A|} sum_a (d_eta A)(d_P B) + (d_P A)(d_eta B)
    auto ghosts = t.ghosts(0);
    auto antis = t.antighosts();
    if (ghosts.empty()) return out;
    for (auto part : {Parity::Even, Parity::Odd}) {
        SuperElement ap = gradedPart(a, Grading::Parity, int(part));
        if (ap.isZero()) continue;
        int sign = (part == Parity::Odd) ? -1 : 1;
        for (size_t i = 0; i < ghosts.size(); ++i) {
            SuperElement de = leftDerivative(ap, ghosts[i]);
            SuperElement dp = leftDerivative(ap, antis[i]);
            SuperElement term(t);
            if (!de.isZero()) term = term + de * leftDerivative(b, antis[i]);
            if (!dp.isZero()) term = term + dp * leftDerivative(b, ghosts[i]);
            if (!term.isZero()) out = out + term * Scalar(sign);
        }
    }
    return out;
}

ConstraintSystem::ConstraintSystem(PhaseSpace space, std::shared_ptr<GeneratorTable> table,
                                   std::vector<SuperElement> constraints,
                                   std::vector<std::vector<std::vector<SuperElement>>> structure)
    : space_(std::move(space)), table_(std::move(table)), constraints_(std::move(constraints)),
      structure_(std::move(structure)) {
    size_t M = constraints_.size();
    for (const auto& g : constraints_) {
        if (!coordinateOnly(g)) throw Error("constraints must be coordinate-only");
        auto p = g.homogeneousParity();
        if (!p || *p != Parity::Even) throw Error("constraints must be Bosonic (even)");
    }
    if (structure_.size() != M) throw Error("structure functions must be MxMxM");
    for (auto& row : structure_) {
        if (row.size() != M) throw Error("structure functions must be MxMxM");
        for (auto& entry : row)
            if (entry.size() != M) throw Error("structure functions must be MxMxM");
    }
    for (size_t a = 0; a < M; ++a)
        for (size_t b = 0; b < M; ++b)
            for (size_t c = 0; c < M; ++c) {
                if (!coordinateOnly(structure_[a][b][c]))
                    throw Error("structure functions must be coordinate-only");
                if (!(structure_[a][b][c] == -structure_[b][a][c]))
                    throw Error("structure functions must be antisymmetric in (a,b)");
            }
}

const SuperElement& ConstraintSystem::structure(int a, int b, int c) const {
    return structure_.at(size_t(a)).at(size_t(b)).at(size_t(c));
}

FirstClassReport verifyFirstClass(const ConstraintSystem& cs) {
    FirstClassReport rep;
    int M = cs.count();
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b) {
            SuperElement d = poissonBracket(cs.space(), cs.constraint(a), cs.constraint(b));
            for (int c = 0; c < M; ++c) d = d - cs.structure(a, b, c) * cs.constraint(c);
            if (!d.isZero()) rep.pass = false;
            rep.defects.push_back({a, b, std::move(d)});
        }
    return rep;
}

VectorField hamiltonianVectorField(const PhaseSpace& ps, const SuperElement& g) {
    const GeneratorTable& t = g.table();
    VectorField X(t);
    int d = ps.dim();
    for (int l = 0; l < d; ++l) {
        SuperElement comp(t);
        for (int m = 0; m < d; ++m) {
            const Scalar& s = ps.sigma[size_t(l)][size_t(m)];
            if (isZero(s)) continue;
            comp = comp + leftDerivative(g, GenId(m)) * s;
        }
        X.setComponent(GenId(l), std::move(comp));
    }
    return X;
}

VectorField hamiltonianVectorField(const ConstraintSystem& cs, int a) {
    return hamiltonianVectorField(cs.space(), cs.constraint(a));
}

namespace {
void enumerateRec(const GeneratorTable& t, const std::vector<GenId>& coords, size_t i, int left,
                  Monomial& cur, std::vector<Monomial>& out) {
    if (i == coords.size()) {
        out.push_back(cur);
        return;
    }
    // exponent 0 first keeps lexicographic order within one total degree
    for (int e = 0; e <= left; ++e) {
        if (e > 0) cur.evens.push_back({coords[i], uint32_t(e)});
        enumerateRec(t, coords, i + 1, left - e, cur, out);
        if (e > 0) cur.evens.pop_back();
    }
}
} // namespace

std::vector<Monomial> coordinateMonomials(const GeneratorTable& t, int bound) {
    std::vector<GenId> coords = t.coordinates();
    std::vector<Monomial> out;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> atDegree;
        Monomial cur;
        enumerateRec(t, coords, 0, d, cur, atDegree);
        for (auto& m : atDegree) {
            int total = 0;
            for (auto [id, e] : m.evens) total += int(e);
            if (total == d) out.push_back(std::move(m));
        }
    }
    return out;
}

int defaultIdealBound(const SuperElement& r, const std::vector<SuperElement>& G) {
    int minG = 0;
    bool haveG = false;
    for (const auto& g : G) {
        if (g.isZero()) continue;
        int dg = 1 << 30;
        for (const auto& [m, c] : g.terms()) dg = std::min(dg, m.zDegree(g.table()));
        minG = haveG ? std::min(minG, dg) : dg;
        haveG = true;
    }
    return std::max(0, r.maxZDegree() - (haveG ? minG : 0) + 2);
}

std::optional<std::vector<SuperElement>> idealMembership(const SuperElement& r,
                                                         const std::vector<SuperElement>& G,
                                                         int zDegreeBound) {
    const GeneratorTable& t = r.table();
    auto monos = coordinateMonomials(t, zDegreeBound);

    linalg::SpanSolver solver(1);
    // column order: (degree, lex) over monomials, then constraint index
    for (const auto& m : monos)
        for (const auto& g : G)
            solver.addColumn({SuperElement::monomial(t, m, 1) * g});

    auto sol = solver.solveFor({r});
    if (!sol) return std::nullopt;

    std::vector<SuperElement> h(G.size(), SuperElement(t));
    size_t col = 0;
    for (const auto& m : monos)
        for (size_t c = 0; c < G.size(); ++c, ++col)
            if (!isZero((*sol)[col]))
                h[c] = h[c] + SuperElement::monomial(t, m, (*sol)[col]);
    return h;
}

std::optional<std::vector<std::vector<std::vector<SuperElement>>>>
solveStructureFunctions(const PhaseSpace& ps, const GeneratorTable& t,
                        const std::vector<SuperElement>& G, int zDegreeBound) {
    size_t M = G.size();
    std::vector<std::vector<std::vector<SuperElement>>> C(
        M, std::vector<std::vector<SuperElement>>(M, std::vector<SuperElement>(M, SuperElement(t))));
    for (size_t a = 0; a < M; ++a)
        for (size_t b = a + 1; b < M; ++b) {
            SuperElement r = poissonBracket(ps, G[a], G[b]);
            int bound = zDegreeBound >= 0 ? zDegreeBound : defaultIdealBound(r, G);
            auto h = idealMembership(r, G, bound);
            if (!h) return std::nullopt;
            for (size_t c = 0; c < M; ++c) {
                C[a][b][c] = (*h)[c];
                C[b][a][c] = -(*h)[c];
            }
        }
    return C;
}

} // namespace brst
