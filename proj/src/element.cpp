#include "brst/element.hpp"

#include <algorithm>
#include <sstream>

namespace brst {

int Monomial::pureGhost(const GeneratorTable& t) const {
    int d = 0;
    for (auto [id, e] : evens) d += t.gen(id).pureGhost * int(e);
    for (auto id : odds) d += t.gen(id).pureGhost;
    return d;
}

int Monomial::antiGhost(const GeneratorTable& t) const {
    int d = 0;
    for (auto [id, e] : evens) d += t.gen(id).antiGhost * int(e);
    for (auto id : odds) d += t.gen(id).antiGhost;
    return d;
}

int Monomial::aux(const GeneratorTable& t) const {
    int d = 0;
    for (auto [id, e] : evens) d += t.gen(id).aux * int(e);
    for (auto id : odds) d += t.gen(id).aux;
    return d;
}

int Monomial::zDegree(const GeneratorTable& t) const {
    int d = 0;
    for (auto [id, e] : evens)
        if (t.gen(id).kind == GenKind::Coordinate) d += int(e);
    return d;
}

int Monomial::ghostWordLength(const GeneratorTable& t) const {
    int d = 0;
    for (auto [id, e] : evens)
        if (t.gen(id).kind != GenKind::Coordinate) d += int(e);
    for (auto id : odds)
        if (t.gen(id).kind != GenKind::Coordinate) d += 1;
    return d;
}

Parity Monomial::parity(const GeneratorTable&) const {
    return Parity(odds.size() % 2);
}

SuperElement SuperElement::constant(const GeneratorTable& t, const Scalar& c) {
    SuperElement e(t);
    if (!brst::isZero(c)) e.terms_[Monomial{}] = c;
    return e;
}

SuperElement SuperElement::generator(const GeneratorTable& t, GenId g) {
    Monomial m;
    if (t.gen(g).odd())
        m.odds.push_back(g);
    else
        m.evens.push_back({g, 1});
    return monomial(t, std::move(m), 1);
}

SuperElement SuperElement::monomial(const GeneratorTable& t, Monomial m, Scalar c) {
    SuperElement e(t);
    if (!brst::isZero(c)) e.terms_[std::move(m)] = std::move(c);
    return e;
}

const GeneratorTable& SuperElement::table() const {
    if (!tab_) throw Error("element has no generator table");
    return *tab_;
}

Scalar SuperElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SuperElement::addTerm(Monomial m, Scalar c) {
    if (brst::isZero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (brst::isZero(it->second)) terms_.erase(it);
    }
}

SuperElement SuperElement::operator-() const {
    SuperElement out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
    SuperElement out = *this;
    if (!out.tab_) out.tab_ = o.tab_;
    for (const auto& [m, c] : o.terms_) out.addTerm(m, c);
    return out;
}

SuperElement SuperElement::operator-(const SuperElement& o) const {
    SuperElement out = *this;
    if (!out.tab_) out.tab_ = o.tab_;
    for (const auto& [m, c] : o.terms_) out.addTerm(m, -c);
    return out;
}

SuperElement SuperElement::operator*(const Scalar& c) const {
    SuperElement out = *this;
    if (brst::isZero(c)) {
        out.terms_.clear();
        return out;
    }
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

namespace {

// Product of canonical monomials. Sign = parity of crossings between the two
// ascending odd lists; a shared odd generator kills the term.
bool mulMonomial(const Monomial& a, const Monomial& b, Monomial& out, int& sign) {
    out.evens.clear();
    out.odds.clear();
    sign = 1;

    // merge even multidegrees
    size_t i = 0, j = 0;
    while (i < a.evens.size() || j < b.evens.size()) {
        if (j == b.evens.size() || (i < a.evens.size() && a.evens[i].first < b.evens[j].first))
            out.evens.push_back(a.evens[i++]);
        else if (i == a.evens.size() || b.evens[j].first < a.evens[i].first)
            out.evens.push_back(b.evens[j++]);
        else {
            out.evens.push_back({a.evens[i].first, a.evens[i].second + b.evens[j].second});
            ++i, ++j;
        }
    }

    // merge odd lists, counting inversions: each b-element passed over a
    // remaining a-element is one odd-odd transposition
    i = 0, j = 0;
    size_t crossings = 0;
    while (i < a.odds.size() || j < b.odds.size()) {
        if (j == b.odds.size())
            out.odds.push_back(a.odds[i++]);
        else if (i == a.odds.size()) {
            out.odds.push_back(b.odds[j++]);
        } else if (a.odds[i] < b.odds[j]) {
            out.odds.push_back(a.odds[i++]);
        } else if (b.odds[j] < a.odds[i]) {
            crossings += a.odds.size() - i;
            out.odds.push_back(b.odds[j++]);
        } else {
            return false; // odd generator squared
        }
    }
    if (crossings % 2) sign = -1;
    return true;
}

} // namespace

SuperElement SuperElement::operator*(const SuperElement& o) const {
    const GeneratorTable& t = tab_ ? *tab_ : o.table();
    SuperElement out(t);
    Monomial prod;
    int sign;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (!mulMonomial(ma, mb, prod, sign)) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            out.addTerm(prod, std::move(c));
        }
    return out;
}

std::optional<Parity> SuperElement::homogeneousParity() const {
    if (terms_.empty()) return Parity::Even;
    Parity p = terms_.begin()->first.parity(table());
    for (const auto& [m, c] : terms_)
        if (m.parity(table()) != p) return std::nullopt;
    return p;
}

std::optional<int> SuperElement::homogeneousDegree(Grading which) const {
    auto parts = grade(*this, which);
    if (parts.size() != 1) return std::nullopt;
    return parts.begin()->first;
}

int SuperElement::maxZDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.zDegree(table()));
    return d;
}

SuperElement normalize(const GeneratorTable& t,
                       const std::vector<std::pair<Scalar, std::vector<GenId>>>& raw) {
    SuperElement out(t);
    for (const auto& [coeff, seq] : raw) {
        if (isZero(coeff)) continue;
        Monomial m;
        std::vector<GenId> odds;
        for (GenId g : seq) {
            const Generator& info = t.gen(g); // throws on bad id via .at
            if (info.odd()) {
                odds.push_back(g);
            } else {
                auto it = std::lower_bound(m.evens.begin(), m.evens.end(), g,
                                           [](const auto& p, GenId x) { return p.first < x; });
                if (it != m.evens.end() && it->first == g)
                    it->second += 1;
                else
                    m.evens.insert(it, {g, 1});
            }
        }
        // sort odds by insertion, counting odd-odd transpositions
        size_t swaps = 0;
        bool dead = false;
        for (size_t i = 0; i < odds.size() && !dead; ++i) {
            size_t j = i;
            while (j > 0 && odds[j - 1] > odds[j]) {
                std::swap(odds[j - 1], odds[j]);
                ++swaps;
                --j;
            }
            if (j > 0 && odds[j - 1] == odds[j]) dead = true;
        }
        if (dead) continue;
        m.odds = std::move(odds);
        out.addTerm(std::move(m), (swaps % 2) ? Scalar(-coeff) : coeff);
    }
    return out;
}

SuperElement word(const GeneratorTable& t, const Scalar& c,
                  const std::vector<std::string>& names) {
    std::vector<GenId> seq;
    seq.reserve(names.size());
    for (const auto& n : names) seq.push_back(t.idOf(n));
    return normalize(t, {{c, seq}});
}

SuperElement leftDerivative(const SuperElement& e, GenId g) {
    const GeneratorTable& t = e.table();
    SuperElement out(t);
    const Generator& info = t.gen(g);
    for (const auto& [m, c] : e.terms()) {
        if (!info.odd()) {
            auto it = std::find_if(m.evens.begin(), m.evens.end(),
                                   [&](const auto& p) { return p.first == g; });
            if (it == m.evens.end()) continue;
            Monomial d = m;
            auto dit = d.evens.begin() + (it - m.evens.begin());
            Scalar k = c * Scalar(long(dit->second));
            if (dit->second == 1)
                d.evens.erase(dit);
            else
                dit->second -= 1;
            out.addTerm(std::move(d), std::move(k));
        } else {
            auto it = std::find(m.odds.begin(), m.odds.end(), g);
            if (it == m.odds.end()) continue;
            size_t pos = size_t(it - m.odds.begin()); // # odd factors in front
            Monomial d = m;
            d.odds.erase(d.odds.begin() + pos);
            out.addTerm(std::move(d), (pos % 2) ? Scalar(-c) : c);
        }
    }
    return out;
}

std::map<int, SuperElement> grade(const SuperElement& e, Grading which) {
    const GeneratorTable& t = e.table();
    std::map<int, SuperElement> parts;
    for (const auto& [m, c] : e.terms()) {
        int d = 0;
        switch (which) {
            case Grading::PureGhost: d = m.pureGhost(t); break;
            case Grading::AntiGhost: d = m.antiGhost(t); break;
            case Grading::GhostNumber: d = m.ghostNumber(t); break;
            case Grading::Aux: d = m.aux(t); break;
            case Grading::Parity: d = int(m.parity(t)); break;
            case Grading::ZDegree: d = m.zDegree(t); break;
        }
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, SuperElement(t)).first;
        it->second.addTerm(m, c);
    }
    return parts;
}

SuperElement gradedPart(const SuperElement& e, Grading which, int degree) {
    auto parts = grade(e, which);
    auto it = parts.find(degree);
    return it == parts.end() ? SuperElement(e.table()) : it->second;
}

std::string to_string(const SuperElement& e) {
    if (e.isZero()) return "0";
    const GeneratorTable& t = e.table();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Scalar a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (!(a == 1) || m.isOne()) factors.push_back(a.get_str());
        for (auto [id, exp] : m.evens) {
            std::string f = t.gen(id).name;
            if (exp > 1) f += "^" + std::to_string(exp);
            factors.push_back(f);
        }
        for (auto id : m.odds) factors.push_back(t.gen(id).name);
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SuperElement& e) { return os << to_string(e); }

} // namespace brst
