#include "brst/cohomology.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace brst {

LinearOp asOp(const BRSTDifferential& S) {
    return [&S](const SuperElement& e) { return S(e); };
}

LinearOp asOp(const Derivation& d) {
    return [&d](const SuperElement& e) { return applyDerivation(d, e); };
}

std::vector<Monomial> ghostNumberBasis(const GeneratorTable& t, int ghostNumber, int zBound) {
    // ghost words: odd generators appear at most once, even non-coordinate
    // generators with exponents bounded through their positive ghost number
    std::vector<const Generator*> ghostGens;
    int negativeCapacity = 0;
    for (const auto& g : t.all()) {
        if (g.kind == GenKind::Coordinate) continue;
        ghostGens.push_back(&g);
        int gh = g.pureGhost - g.antiGhost;
        if (gh < 0) negativeCapacity += -gh; // odd generators only, so one each
    }

    std::vector<std::pair<Monomial, int>> words; // (ghost word, ghost number)
    Monomial cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int gh) {
        if (i == ghostGens.size()) {
            words.push_back({cur, gh});
            return;
        }
        const Generator& g = *ghostGens[i];
        int ggh = g.pureGhost - g.antiGhost;
        int maxExp = 1;
        if (!g.odd()) {
            // even ghost generators have ggh >= 1
            maxExp = ggh > 0 ? std::max(0, (ghostNumber + negativeCapacity - gh) / ggh) : 0;
        }
        for (int e = 0; e <= maxExp; ++e) {
            if (e > 0) {
                if (g.odd())
                    cur.odds.push_back(g.id);
                else {
                    auto it = std::lower_bound(
                        cur.evens.begin(), cur.evens.end(), g.id,
                        [](const auto& p, GenId x) { return p.first < x; });
                    if (it != cur.evens.end() && it->first == g.id)
                        it->second += 1;
                    else
                        cur.evens.insert(it, {g.id, 1});
                }
            }
            rec(i + 1, gh + e * ggh);
            if (e == maxExp) {
                if (g.odd() && e > 0) cur.odds.pop_back();
                if (!g.odd() && e > 0) {
                    auto it = std::find_if(cur.evens.begin(), cur.evens.end(),
                                           [&](const auto& p) { return p.first == g.id; });
                    if (it->second == uint32_t(e))
                        cur.evens.erase(it);
                    else
                        it->second -= uint32_t(e);
                }
            }
        }
    };
    rec(0, 0);
    // odd lists were built in generator order, already ascending

    auto zmonos = coordinateMonomials(t, zBound);
    std::vector<Monomial> out;
    for (const auto& zm : zmonos)
        for (const auto& [w, gh] : words) {
            if (gh != ghostNumber) continue;
            Monomial m = w;
            for (const auto& p : zm.evens) {
                auto it = std::lower_bound(m.evens.begin(), m.evens.end(), p.first,
                                           [](const auto& q, GenId x) { return q.first < x; });
                m.evens.insert(it, p);
            }
            out.push_back(std::move(m));
        }
    return out;
}

Truncation assembleMatrix(const GeneratorTable& t, const LinearOp& op, int ghostNumber,
                          int zBound) {
    Truncation tr;
    tr.ghostNumber = ghostNumber;
    tr.zBound = zBound;
    tr.domainBasis = ghostNumberBasis(t, ghostNumber, zBound);

    const size_t n = tr.domainBasis.size();
    std::vector<SuperElement> images(n, SuperElement(t));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)n; ++i)
        images[size_t(i)] = op(SuperElement::monomial(t, tr.domainBasis[size_t(i)], 1));

    std::map<Monomial, size_t> rows;
    for (const auto& img : images)
        for (const auto& [m, c] : img.terms())
            if (!rows.count(m)) {
                size_t r = rows.size();
                rows[m] = r;
            }
    tr.codomainBasis.resize(rows.size());
    for (const auto& [m, r] : rows) tr.codomainBasis[r] = m;

    tr.matrix.assign(rows.size(), std::vector<Scalar>(n, Scalar(0)));
    for (size_t c = 0; c < n; ++c)
        for (const auto& [m, k] : images[c].terms()) tr.matrix[rows[m]][c] = k;
    return tr;
}

int maxZDegreeDrop(const GeneratorTable& t, const LinearOp& op) {
    int drop = 0;
    for (const auto& g : t.all()) {
        SuperElement v = op(SuperElement::generator(t, g.id));
        int zg = g.kind == GenKind::Coordinate ? 1 : 0;
        for (const auto& [m, c] : v.terms()) drop = std::max(drop, zg - m.zDegree(t));
    }
    return drop;
}

namespace {

struct WindowData {
    std::vector<Monomial> basis;
    std::map<Monomial, size_t> index;
};

WindowData window(const GeneratorTable& t, int ghostNumber, int zBound) {
    WindowData w;
    w.basis = ghostNumberBasis(t, ghostNumber, zBound);
    for (size_t i = 0; i < w.basis.size(); ++i) w.index[w.basis[i]] = i;
    return w;
}

int dimensionAt(const GeneratorTable& t, const LinearOp& op, int g, int D, int drop,
                std::vector<SuperElement>* reps) {
    WindowData W = window(t, g, D);
    if (W.basis.empty()) return 0;

    // kernel of op restricted to the window
    Truncation tr;
    {
        tr = assembleMatrix(t, op, g, D);
    }
    auto kernel = linalg::nullspaceN(tr.matrix, tr.domainBasis.size());

    // boundaries: images of the level below, windowed against W
    std::vector<Monomial> below = ghostNumberBasis(t, g - 1, D + drop);
    std::vector<std::vector<Scalar>> boundaryIn; // inside-window column vectors
    if (!below.empty()) {
        std::vector<SuperElement> images(below.size(), SuperElement(t));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < (long long)below.size(); ++i)
            images[size_t(i)] = op(SuperElement::monomial(t, below[size_t(i)], 1));

        // rows: inside-window monomials first, then the out-of-window rest
        std::map<Monomial, size_t> outRows;
        for (const auto& img : images)
            for (const auto& [m, c] : img.terms())
                if (!W.index.count(m) && !outRows.count(m)) {
                    size_t r = outRows.size();
                    outRows[m] = r;
                }
        linalg::QMatrix inPart(W.basis.size(), std::vector<Scalar>(below.size(), Scalar(0)));
        linalg::QMatrix outPart(outRows.size(), std::vector<Scalar>(below.size(), Scalar(0)));
        for (size_t c = 0; c < images.size(); ++c)
            for (const auto& [m, k] : images[c].terms()) {
                auto it = W.index.find(m);
                if (it != W.index.end())
                    inPart[it->second][c] = k;
                else
                    outPart[outRows[m]][c] = k;
            }
        // combinations landing entirely inside the window
        auto insideKernel = linalg::nullspaceN(outPart, below.size());
        for (const auto& v : insideKernel) {
            std::vector<Scalar> w(W.basis.size(), Scalar(0));
            for (size_t r = 0; r < W.basis.size(); ++r)
                for (size_t c = 0; c < v.size(); ++c)
                    if (!isZero(v[c]) && !isZero(inPart[r][c])) w[r] += inPart[r][c] * v[c];
            boundaryIn.push_back(std::move(w));
        }
    }

    // reduce the kernel modulo boundary span: rref the boundary rows, then
    // sweep each cycle and keep the independent residues
    linalg::QMatrix reducer = boundaryIn;
    size_t boundaryRank = linalg::rref(reducer).size();
    while (reducer.size() > boundaryRank) reducer.pop_back();

    int dim = 0;
    for (const auto& cyc : kernel) {
        std::vector<Scalar> v = cyc;
        // eliminate against the reduced boundary rows
        for (const auto& row : reducer) {
            size_t lead = 0;
            while (lead < row.size() && isZero(row[lead])) ++lead;
            if (lead == row.size()) continue;
            if (!isZero(v[lead])) {
                Scalar f = v[lead] / row[lead];
                for (size_t j = lead; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return isZero(s); });
        if (!zero) {
            // accumulate into the reducer so later cycles reduce against it
            linalg::QMatrix tmp = reducer;
            tmp.push_back(v);
            auto piv = linalg::rref(tmp);
            if (piv.size() > reducer.size()) {
                reducer = std::move(tmp);
                while (reducer.size() > piv.size()) reducer.pop_back();
                ++dim;
                if (reps) {
                    SuperElement rep(t);
                    for (size_t j = 0; j < cyc.size(); ++j)
                        if (!isZero(cyc[j])) rep.addTerm(W.basis[j], cyc[j]);
                    reps->push_back(std::move(rep));
                }
            }
        }
    }
    return dim;
}

} // namespace

CohomologyResult cohomologyDim(const GeneratorTable& t, const LinearOp& op, int ghostNumber,
                               int zBound) {
    int drop = maxZDegreeDrop(t, op);
    CohomologyResult res;
    res.dimension = dimensionAt(t, op, ghostNumber, zBound, drop, &res.representatives);
    res.dimensionAtNextBound = dimensionAt(t, op, ghostNumber, zBound + 1, drop, nullptr);
    res.stable = res.dimension == res.dimensionAtNextBound;
    return res;
}

Derivation ceComplex(const GeneratorTable& t,
                     const std::vector<std::vector<std::vector<Scalar>>>& f,
                     const std::vector<VectorField>& representation) {
    size_t M = f.size();
    for (const auto& r1 : f) {
        if (r1.size() != M) throw JacobiFailure("structure constants must be MxMxM");
        for (const auto& r2 : r1)
            if (r2.size() != M) throw JacobiFailure("structure constants must be MxMxM");
    }
    for (size_t a = 0; a < M; ++a)
        for (size_t b = 0; b < M; ++b)
            for (size_t c = 0; c < M; ++c)
                if (!(f[a][b][c] == -f[b][a][c]))
                    throw JacobiFailure("structure constants must be antisymmetric");
    for (size_t a = 0; a < M; ++a)
        for (size_t b = 0; b < M; ++b)
            for (size_t c = 0; c < M; ++c)
                for (size_t d = 0; d < M; ++d) {
                    Scalar s = 0;
                    for (size_t e = 0; e < M; ++e)
                        s += f[a][b][e] * f[e][c][d] + f[b][c][e] * f[e][a][d] +
                             f[c][a][e] * f[e][b][d];
                    if (!isZero(s)) throw JacobiFailure("Jacobi identity fails");
                }
    if (!representation.empty() && representation.size() != M)
        throw JacobiFailure("representation must assign one field per basis element");

    std::map<GenId, SuperElement> vals;
    for (GenId z : t.coordinates()) {
        SuperElement v(t);
        for (size_t a = 0; a < M; ++a) {
            if (representation.empty()) break;
            v = v + representation[a].component(z) *
                        SuperElement::generator(t, t.ghost(int(a) + 1));
        }
        if (!v.isZero()) vals[z] = std::move(v);
    }
    for (size_t a = 0; a < M; ++a) {
        SuperElement v(t);
        for (size_t b = 0; b < M; ++b)
            for (size_t c = 0; c < M; ++c) {
                const Scalar& F = f[c][b][a]; // f^a_{cb}
                if (isZero(F)) continue;
                v = v - SuperElement::generator(t, t.ghost(int(b) + 1)) *
                            SuperElement::generator(t, t.ghost(int(c) + 1)) * F * rational(1, 2);
            }
        if (!v.isZero()) vals[t.ghost(int(a) + 1)] = std::move(v);
    }
    auto d = Derivation::make(t, Parity::Odd, {1, 0, 0}, std::move(vals));
    for (const auto& [g, defect] : nilpotencyDefect(d))
        if (!defect.isZero())
            throw JacobiFailure("d^2 != 0 on generators: representation does not close");
    return d;
}

} // namespace brst
