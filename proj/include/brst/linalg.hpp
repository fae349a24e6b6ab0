#pragma once

#include "brst/element.hpp"
#include "brst/scalar.hpp"

#include <optional>
#include <vector>

namespace brst::linalg {

/// Dense exact rational matrix, row major.
using QMatrix = std::vector<std::vector<Scalar>>;

/// Kernel selection. Parallel and Serial produce bit-identical results; the
/// serial path is the reference implementation the parallel one is tested
/// against (and what the bench tool compares).
enum class Exec { Serial, Parallel };

Exec defaultExec();
void setDefaultExec(Exec e);

/// Rank by fraction-free (Bareiss) elimination over scaled integer rows.
int rank(QMatrix m, Exec exec = defaultExec());

/// In-place reduced row echelon form with the fixed left-to-right column
/// order; returns the pivot columns. Deterministic.
std::vector<int> rref(QMatrix& m, Exec exec = defaultExec());

/// Exact solve A x = b. Returns the deterministic representative with all
/// free variables zero, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const QMatrix& A, const std::vector<Scalar>& b,
                                         Exec exec = defaultExec());

/// Basis of the right nullspace, one vector per free column, deterministic.
std::vector<std::vector<Scalar>> nullspace(const QMatrix& A, Exec exec = defaultExec());

/// Same with an explicit column count (a rowless matrix is the zero map
/// out of a `cols`-dimensional space).
std::vector<std::vector<Scalar>> nullspaceN(const QMatrix& A, size_t cols,
                                            Exec exec = defaultExec());

/// Exact linear span problem over tuples of SuperElements: find scalars
/// lambda_j with sum_j lambda_j * column_j = target, component-wise. Columns
/// are considered in insertion order; the solution is the RREF representative
/// (free variables zero), so callers control the "minimal first" policy by
/// ordering columns (e.g. by ascending monomial degree).
class SpanSolver {
  public:
    explicit SpanSolver(size_t slots) : slots_(slots) {}

    size_t addColumn(std::vector<SuperElement> col);
    std::optional<std::vector<Scalar>> solveFor(const std::vector<SuperElement>& target,
                                                Exec exec = defaultExec()) const;
    size_t columnCount() const { return cols_.size(); }

  private:
    size_t slots_;
    std::vector<std::vector<SuperElement>> cols_;
};

} // namespace brst::linalg
