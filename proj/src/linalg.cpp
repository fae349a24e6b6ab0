#include "brst/linalg.hpp"

#include <atomic>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace brst::linalg {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec defaultExec() { return g_exec.load(); }
void setDefaultExec(Exec e) { g_exec.store(e); }

int rank(QMatrix m, Exec exec) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();

    // scale rows to integers; row scaling preserves rank
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < cols; ++j) l = lcm(l, m[i][j].get_den());
        for (size_t j = 0; j < cols; ++j) {
            mpq_class q = m[i][j] * Scalar(l);
            a[i][j] = q.get_num();
        }
    }

    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);

        const bool par = exec == Exec::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (long long ii = (long long)r + 1; ii < (long long)rows; ++ii) {
            size_t i = size_t(ii);
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        (void)par;
        prev = a[r][c];
        ++r;
    }
    return int(r);
}

std::vector<int> rref(QMatrix& m, Exec exec) {
    std::vector<int> pivots;
    const size_t rows = m.size();
    if (rows == 0) return pivots;
    const size_t cols = m[0].size();

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && isZero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);

        Scalar inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;

        const bool par = exec == Exec::Parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
        for (long long ii = 0; ii < (long long)rows; ++ii) {
            size_t i = size_t(ii);
            if (i == r || isZero(m[i][c])) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        (void)par;
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

std::optional<std::vector<Scalar>> solve(const QMatrix& A, const std::vector<Scalar>& b,
                                         Exec exec) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    QMatrix aug(rows, std::vector<Scalar>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug, exec);
    if (!pivots.empty() && pivots.back() == int(cols)) return std::nullopt; // 0 = 1 row
    // rows == 0 or all-zero A: solvable iff b == 0
    for (size_t i = pivots.size(); i < rows; ++i)
        if (!isZero(aug[i][cols])) return std::nullopt;

    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[size_t(pivots[k])] = aug[k][cols];
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const QMatrix& A, Exec exec) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    QMatrix m = A;
    auto pivots = rref(m, exec);

    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[size_t(c)] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[size_t(pivots[k])] = -m[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>> nullspaceN(const QMatrix& A, size_t cols, Exec exec) {
    if (!A.empty()) return nullspace(A, exec);
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols; ++f) {
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t SpanSolver::addColumn(std::vector<SuperElement> col) {
    if (col.size() != slots_) throw Error("SpanSolver: column has wrong slot count");
    cols_.push_back(std::move(col));
    return cols_.size() - 1;
}

std::optional<std::vector<Scalar>> SpanSolver::solveFor(const std::vector<SuperElement>& target,
                                                        Exec exec) const {
    if (target.size() != slots_) throw Error("SpanSolver: target has wrong slot count");

    // row index: (slot, monomial) pairs appearing anywhere
    std::map<std::pair<size_t, Monomial>, size_t> rowIdx;
    auto rowOf = [&](size_t slot, const Monomial& m) {
        auto key = std::make_pair(slot, m);
        auto it = rowIdx.find(key);
        if (it == rowIdx.end()) it = rowIdx.emplace(key, rowIdx.size()).first;
        return it->second;
    };
    for (size_t j = 0; j < cols_.size(); ++j)
        for (size_t s = 0; s < slots_; ++s)
            for (const auto& [m, c] : cols_[j][s].terms()) rowOf(s, m);
    for (size_t s = 0; s < slots_; ++s)
        for (const auto& [m, c] : target[s].terms()) rowOf(s, m);

    const size_t rows = rowIdx.size();
    QMatrix A(rows, std::vector<Scalar>(cols_.size(), Scalar(0)));
    std::vector<Scalar> b(rows, Scalar(0));
    for (size_t j = 0; j < cols_.size(); ++j)
        for (size_t s = 0; s < slots_; ++s)
            for (const auto& [m, c] : cols_[j][s].terms())
                A[rowOf(s, m)][j] = c;
    for (size_t s = 0; s < slots_; ++s)
        for (const auto& [m, c] : target[s].terms()) b[rowOf(s, m)] = c;

    return solve(A, b, exec);
}

} // namespace brst::linalg
