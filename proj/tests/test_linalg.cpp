#include "brst/linalg.hpp"
#include "fixtures.hpp"

#include <doctest.h>
#include <random>

using namespace brst;
using namespace brst::linalg;

namespace {
QMatrix randomMatrix(std::mt19937_64& rng, size_t r, size_t c) {
    std::uniform_int_distribution<long> d(-6, 6), den(1, 4);
    QMatrix m(r, std::vector<Scalar>(c));
    for (auto& row : m)
        for (auto& v : row) v = rational(d(rng), den(rng));
    return m;
}
} // namespace

TEST_CASE("rank/rref basics") {
    QMatrix m = {{rational(1), rational(2)}, {rational(2), rational(4)}};
    CHECK(rank(m) == 1);
    QMatrix id = {{rational(1), rational(0)}, {rational(0), rational(1)}};
    CHECK(rank(id) == 2);
    CHECK(rank(QMatrix{}) == 0);

    QMatrix a = {{rational(0), rational(1), rational(2)}, {rational(1), rational(1), rational(1)}};
    auto piv = rref(a);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(a[0][0] == 1);
    CHECK(a[0][1] == 0);
    CHECK(a[1][1] == 1);
}

TEST_CASE("solve and nullspace") {
    QMatrix A = {{rational(1), rational(1)}, {rational(1), rational(-1)}};
    auto x = solve(A, {rational(2), rational(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    QMatrix B = {{rational(1), rational(1)}};
    auto y = solve(B, {rational(3)});
    REQUIRE(y.has_value());
    // deterministic representative: free variable zero
    CHECK((*y)[0] == 3);
    CHECK((*y)[1] == 0);

    QMatrix C = {{rational(1), rational(0)}, {rational(1), rational(0)}};
    CHECK(!solve(C, {rational(1), rational(2)}).has_value());

    auto ns = nullspace(QMatrix{{rational(1), rational(2), rational(3)}});
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(isZero(v[0] * rational(1) + v[1] * rational(2) + v[2] * rational(3)));
}

TEST_CASE("serial and parallel kernels agree exactly") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 10; ++it) {
        auto m = randomMatrix(rng, 17, 23);
        CHECK(rank(m, Exec::Serial) == rank(m, Exec::Parallel));
        QMatrix a = m, b = m;
        auto p1 = rref(a, Exec::Serial);
        auto p2 = rref(b, Exec::Parallel);
        CHECK(p1 == p2);
        CHECK(a == b);

        auto rhsRow = randomMatrix(rng, 1, 17)[0];
        auto s1 = solve(m, rhsRow, Exec::Serial);
        auto s2 = solve(m, rhsRow, Exec::Parallel);
        CHECK(s1 == s2);
    }
}

TEST_CASE("rank agrees between Bareiss and rational rref") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 10; ++it) {
        auto m = randomMatrix(rng, 12, 9);
        QMatrix c = m;
        auto piv = rref(c);
        CHECK(int(piv.size()) == rank(m));
    }
}

TEST_CASE("SpanSolver solves element equations") {
    auto sys = fixtures::abelianR4M2();
    const auto& t = sys.t();
    SpanSolver solver(1);
    solver.addColumn({sys.w(1, 1, {"p1"})});
    solver.addColumn({sys.w(1, 1, {"p2"})});
    auto target = sys.w(2, 1, {"p1"}) - sys.w(3, 1, {"p2"});
    auto sol = solver.solveFor({target});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == -3);
    CHECK(!solver.solveFor({sys.w(1, 1, {"x1"})}).has_value());
}
