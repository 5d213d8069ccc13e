#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccomp/field.hpp"

namespace ccomp {

// Dense Gaussian elimination over GF(p). Pivots are chosen as the first
// nonzero entry in column order, which keeps every result deterministic.

std::size_t gf_rank(std::vector<std::vector<FieldElem>> rows);

// Solves A x = b. Free variables are set to zero (first solution of the
// echelon back-substitution). Returns nullopt when the system is infeasible.
std::optional<std::vector<FieldElem>> gf_solve(std::vector<std::vector<FieldElem>> a,
                                               std::vector<FieldElem> b);

/// Incremental row reduction that remembers how each basis row was built
/// from the inserted vectors. When an inserted vector turns out to be
/// dependent, insert() returns its expansion over previously inserted
/// vectors: x = sum coeff_j * inserted[j], restricted to nonzero terms.
class IncrementalBasis {
public:
    IncrementalBasis(std::size_t dim, const PrimeField& field);

    std::optional<std::vector<std::pair<std::size_t, FieldElem>>> insert(const Point& x);

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Point reduced;               // echelon form, leading entry 1
        std::size_t pivot;           // column of the leading entry
        std::vector<FieldElem> mix;  // reduced = sum mix[j] * inserted[j]
    };

    std::size_t dim_;
    PrimeField field_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

}  // namespace ccomp
