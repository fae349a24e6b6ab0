#include "brst/derivation.hpp"

namespace brst {

Derivation Derivation::make(const GeneratorTable& t, Parity parity, GradingShift shift,
                            std::map<GenId, SuperElement> values) {
    Derivation D;
    D.tab_ = &t;
    D.parity_ = parity;
    D.shift_ = shift;
    for (auto it = values.begin(); it != values.end();) {
        if (it->second.isZero()) {
            it = values.erase(it);
            continue;
        }
        const Generator& g = t.gen(it->first);
        const SuperElement& v = it->second;
        auto p = v.homogeneousParity();
        if (!p || *p != g.parity + parity)
            throw Error("derivation value on " + g.name + " has wrong parity");
        auto pg = v.homogeneousDegree(Grading::PureGhost);
        auto ag = v.homogeneousDegree(Grading::AntiGhost);
        auto ax = v.homogeneousDegree(Grading::Aux);
        if (!pg || *pg != g.pureGhost + shift.pureGhost || !ag ||
            *ag != g.antiGhost + shift.antiGhost || !ax || *ax != g.aux + shift.aux)
            throw Error("derivation value on " + g.name + " violates the grading shift");
        ++it;
    }
    D.values_ = std::move(values);
    return D;
}

SuperElement Derivation::value(GenId g) const {
    auto it = values_.find(g);
    return it == values_.end() ? SuperElement(table()) : it->second;
}

SuperElement applyDerivation(const Derivation& D, const SuperElement& e) {
    const GeneratorTable& t = e.table();
    SuperElement out(t);
    const bool oddD = D.parity() == Parity::Odd;

    for (const auto& [m, coeff] : e.terms()) {
        // canonical word: all factors in ascending id order
        struct Factor {
            GenId id;
            uint32_t exp;
            bool odd;
        };
        std::vector<Factor> word;
        {
            size_t i = 0, j = 0;
            while (i < m.evens.size() || j < m.odds.size()) {
                if (j == m.odds.size() ||
                    (i < m.evens.size() && m.evens[i].first < m.odds[j]))
                    word.push_back({m.evens[i].first, m.evens[i].second, false}), ++i;
                else
                    word.push_back({m.odds[j], 1, true}), ++j;
            }
        }

        int prefixOdd = 0;
        for (size_t k = 0; k < word.size(); ++k) {
            const auto& f = word[k];
            SuperElement dv = D.value(f.id);
            if (!dv.isZero()) {
                // prefix . D(g) . suffix, with g^{exp-1} kept in place
                Monomial rest = m;
                if (f.odd) {
                    auto it = std::find(rest.odds.begin(), rest.odds.end(), f.id);
                    rest.odds.erase(it);
                } else {
                    for (auto& p : rest.evens)
                        if (p.first == f.id) p.second -= 1;
                    std::erase_if(rest.evens, [](const auto& p) { return p.second == 0; });
                }
                // split rest at the factor position: ids < f.id left, > f.id right;
                // remaining copies of an even f.id commute, keep them left
                Monomial left, right;
                for (const auto& p : rest.evens)
                    (p.first <= f.id ? left.evens : right.evens).push_back(p);
                for (GenId o : rest.odds) (o < f.id ? left.odds : right.odds).push_back(o);

                Scalar c = coeff * Scalar(long(f.exp));
                if (oddD && (prefixOdd % 2)) c = -c;
                SuperElement term = SuperElement::monomial(t, left, c) * dv *
                                    SuperElement::monomial(t, right, 1);
                out = out + term;
            }
            if (f.odd) prefixOdd ^= 1;
        }
    }
    return out;
}

Derivation koszulTate(const ConstraintSystem& cs) {
    const GeneratorTable& t = cs.table();
    std::map<GenId, SuperElement> vals;
    for (int a = 0; a < cs.count(); ++a)
        vals[t.antighost(a + 1)] = -cs.constraint(a);
    return Derivation::make(t, Parity::Odd, {0, -1, 0}, std::move(vals));
}

Derivation longitudinal(const ConstraintSystem& cs) {
    const GeneratorTable& t = cs.table();
    int M = cs.count();
    std::map<GenId, SuperElement> vals;

    std::vector<VectorField> X;
    for (int a = 0; a < M; ++a) X.push_back(hamiltonianVectorField(cs, a));

    for (GenId z : t.coordinates()) {
        SuperElement v(t);
        for (int a = 0; a < M; ++a)
            v = v + X[size_t(a)].component(z) * SuperElement::generator(t, t.ghost(a + 1));
        vals[z] = std::move(v);
    }
    for (int a = 0; a < M; ++a) {
        SuperElement v(t);
        for (int b = 0; b < M; ++b)
            for (int c = 0; c < M; ++c) {
                const SuperElement& C = cs.structure(c, b, a); // C^a_{cb}
                if (C.isZero()) continue;
                v = v - C * SuperElement::generator(t, t.ghost(b + 1)) *
                        SuperElement::generator(t, t.ghost(c + 1)) * rational(1, 2);
            }
        vals[t.ghost(a + 1)] = std::move(v);
    }
    for (int a = 0; a < M; ++a) {
        SuperElement v(t);
        for (int b = 0; b < M; ++b)
            for (int c = 0; c < M; ++c) {
                const SuperElement& C = cs.structure(a, c, b); // C^b_{ac}
                if (C.isZero()) continue;
                v = v + C * SuperElement::generator(t, t.ghost(c + 1)) *
                        SuperElement::generator(t, t.antighost(b + 1));
            }
        vals[t.antighost(a + 1)] = std::move(v);
    }
    return Derivation::make(t, Parity::Odd, {1, 0, 0}, std::move(vals));
}

EvenDerivationAction::EvenDerivationAction(Derivation d1, Derivation d2)
    : d1_(std::move(d1)), d2_(std::move(d2)) {
    if (d1_.parity() != Parity::Odd || d2_.parity() != Parity::Odd) throw ParityMismatch();
    const GeneratorTable& t = d1_.table();
    for (const auto& g : t.all()) {
        SuperElement v = applyDerivation(d1_, d2_.value(g.id)) +
                         applyDerivation(d2_, d1_.value(g.id));
        if (!v.isZero()) values_[g.id] = std::move(v);
    }
}

SuperElement EvenDerivationAction::operator()(const SuperElement& e) const {
    return applyDerivation(d1_, applyDerivation(d2_, e)) +
           applyDerivation(d2_, applyDerivation(d1_, e));
}

bool EvenDerivationAction::vanishesOnGenerators() const { return values_.empty(); }

EvenDerivationAction anticommutator(const Derivation& d1, const Derivation& d2) {
    return EvenDerivationAction(d1, d2);
}

std::map<GenId, SuperElement> nilpotencyDefect(const Derivation& D) {
    std::map<GenId, SuperElement> out;
    for (const auto& g : D.table().all()) {
        SuperElement v = applyDerivation(D, D.value(g.id));
        out[g.id] = std::move(v);
    }
    return out;
}

} // namespace brst
