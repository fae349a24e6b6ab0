#include "fixtures.hpp"

#include <doctest.h>

using namespace brst;
using fixtures::randomElement;

namespace {
const fixtures::System& sys() {
    static fixtures::System s = fixtures::so3();
    return s;
}
} // namespace

TEST_CASE("normalize: Koszul reordering and odd squares") {
    const auto& t = sys().t();
    auto e1 = word(t, 1, {"eta2", "eta1"});
    auto e2 = word(t, -1, {"eta1", "eta2"});
    CHECK(e1 == e2);

    CHECK(word(t, 1, {"eta1", "eta1"}).isZero());

    // even generators commute: 2 x P1 + (-2) P1 x = 0
    auto e3 = word(t, 2, {"x1", "P1"}) + word(t, -2, {"P1", "x1"});
    CHECK(e3.isZero());

    // canonical idempotence: rebuilding from the canonical terms is a no-op
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto e = randomElement(t, rng, 3, 5);
        std::vector<std::pair<Scalar, std::vector<GenId>>> raw;
        for (const auto& [m, c] : e.terms()) {
            std::vector<GenId> seq;
            for (auto [id, exp] : m.evens)
                for (uint32_t k = 0; k < exp; ++k) seq.push_back(id);
            for (auto id : m.odds) seq.push_back(id);
            raw.push_back({c, seq});
        }
        CHECK(normalize(t, raw) == e);
    }
}

TEST_CASE("normalize rejects unknown generators") {
    const auto& t = sys().t();
    CHECK_THROWS_AS((void)word(t, 1, {"nope"}), UnknownGenerator);
}

TEST_CASE("mul: canonical order sign and cross terms") {
    const auto& t = sys().t();
    // (eta1 P1)(eta2 P2) = eta1 eta2 P1 P2 up to the canonical-order sign
    auto lhs = word(t, 1, {"eta1", "P1"}) * word(t, 1, {"eta2", "P2"});
    auto rhs = word(t, 1, {"eta1", "eta2", "P1", "P2"});
    bool match = (lhs == rhs) || (lhs == -rhs);
    CHECK(match);
    // the sign is fixed by the global order: eta1 P1 eta2 P2 -> P1 P2 eta1 eta2
    CHECK(lhs == -rhs);

    // (x + eta1)(x - eta1) = x^2
    auto x = word(t, 1, {"x1"});
    auto eta = word(t, 1, {"eta1"});
    CHECK((x + eta) * (x - eta) == x * x);
}

TEST_CASE("supercommutativity, associativity, odd nilpotence") {
    const auto& t = sys().t();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto pa = Parity(i % 2), pb = Parity((i / 2) % 2);
        auto a = randomElement(t, rng, 2, 3, pa);
        auto b = randomElement(t, rng, 2, 3, pb);
        auto ab = a * b;
        auto ba = b * a;
        if (pa == Parity::Odd && pb == Parity::Odd)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);

        auto c = randomElement(t, rng, 2, 3);
        CHECK((a * b) * c == a * (b * c));
    }
    for (const auto& g : t.all())
        if (g.odd()) {
            auto e = SuperElement::generator(t, g.id);
            CHECK((e * e).isZero());
        }
}

TEST_CASE("grading additivity of mul") {
    const auto& t = sys().t();
    std::mt19937_64 rng(13);
    auto gradings = {Grading::PureGhost, Grading::AntiGhost, Grading::GhostNumber, Grading::Aux,
                     Grading::ZDegree};
    int done = 0;
    for (int i = 0; i < 200 && done < 40; ++i) {
        auto a = randomElement(t, rng, 2, 1);
        auto b = randomElement(t, rng, 2, 1);
        if (a.isZero() || b.isZero()) continue;
        auto ab = a * b;
        if (ab.isZero()) continue;
        ++done;
        for (auto w : gradings) {
            auto da = a.homogeneousDegree(w), db = b.homogeneousDegree(w),
                 dab = ab.homogeneousDegree(w);
            REQUIRE(da.has_value());
            REQUIRE(db.has_value());
            REQUIRE(dab.has_value());
            CHECK(*dab == *da + *db);
        }
    }
    CHECK(done == 40);
}

TEST_CASE("grade: decomposition and ghost numbers") {
    const auto& t = sys().t();
    // eta1 eta2 P1: ghostNumber 1, pureGhost 2, antiGhost 1
    auto e = word(t, 1, {"eta1", "eta2", "P1"});
    CHECK(*e.homogeneousDegree(Grading::GhostNumber) == 1);
    CHECK(*e.homogeneousDegree(Grading::PureGhost) == 2);
    CHECK(*e.homogeneousDegree(Grading::AntiGhost) == 1);

    auto x = word(t, 1, {"x1"});
    CHECK(*x.homogeneousDegree(Grading::GhostNumber) == 0);
    CHECK(*x.homogeneousDegree(Grading::PureGhost) == 0);
    CHECK(*x.homogeneousDegree(Grading::AntiGhost) == 0);
    CHECK(*x.homogeneousDegree(Grading::Aux) == 0);

    // eta1 + eta1 P1 eta2: one ghost-number part, two pure-ghost parts
    auto m = word(t, 1, {"eta1"}) + word(t, 1, {"eta1", "P1", "eta2"});
    CHECK(grade(m, Grading::GhostNumber).size() == 1);
    auto pg = grade(m, Grading::PureGhost);
    CHECK(pg.size() == 2);
    CHECK(pg.count(1) == 1);
    CHECK(pg.count(2) == 1);
    // parts sum back to the element
    SuperElement sum(t);
    for (const auto& [d, part] : pg) sum = sum + part;
    CHECK(sum == m);
}

TEST_CASE("leftDerivative: signs and Leibniz") {
    const auto& t = sys().t();
    auto e12 = word(t, 1, {"eta1", "eta2"});
    CHECK(leftDerivative(e12, t.idOf("eta1")) == word(t, 1, {"eta2"}));
    CHECK(leftDerivative(e12, t.idOf("eta2")) == word(t, -1, {"eta1"}));
    CHECK(leftDerivative(word(t, 1, {"x1", "x1", "P1"}), t.idOf("x1")) ==
          word(t, 2, {"x1", "P1"}));

    // graded Leibniz for the left derivative along each generator
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        auto a = randomElement(t, rng, 2, 2, Parity(i % 2));
        auto b = randomElement(t, rng, 2, 2);
        for (const auto& g : t.all()) {
            auto lhs = leftDerivative(a * b, g.id);
            auto rhs = leftDerivative(a, g.id) * b;
            SuperElement cross = a * leftDerivative(b, g.id);
            if (g.odd() && i % 2 == 1) cross = -cross;
            rhs = rhs + cross;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("textual form") {
    const auto& t = sys().t();
    CHECK(to_string(SuperElement(t)) == "0");
    CHECK(to_string(SuperElement::one(t)) == "1");
    CHECK(to_string(word(t, 1, {"x1", "p2"}) - word(t, 1, {"x2", "p1"})) == "x1*p2 - x2*p1");
    CHECK(to_string(word(t, -1, {"x1", "x1"})) == "-x1^2");
    CHECK(to_string(word(t, 1, {"eta2", "eta1"})) == "-eta1*eta2");
    CHECK(to_string(word(t, 1, {"P1"}) * rational(1, 3)) == "1/3*P1");
}
