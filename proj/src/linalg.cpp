#include "ccomp/linalg.hpp"

#include "ccomp/errors.hpp"

namespace ccomp {

std::size_t gf_rank(std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.size(), m = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && rows[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        FieldElem inv = rows[rank][col].inv();
        for (std::size_t j = col; j < m; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            FieldElem f = rows[i][col];
            for (std::size_t j = col; j < m; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<FieldElem>> gf_solve(std::vector<std::vector<FieldElem>> a,
                                               std::vector<FieldElem> b) {
    const std::size_t n = a.size();
    if (n == 0) return std::vector<FieldElem>{};
    const std::size_t m = a[0].size();
    if (b.size() != n) throw usage_error("gf_solve: dimension mismatch");

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        FieldElem inv = a[rank][col].inv();
        for (std::size_t j = col; j < m; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            FieldElem f = a[i][col];
            for (std::size_t j = col; j < m; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    const u64 p = b.empty() ? 2 : b[0].modulus();
    std::vector<FieldElem> x(m, FieldElem(0, p));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

IncrementalBasis::IncrementalBasis(std::size_t dim, const PrimeField& field)
    : dim_(dim), field_(field) {}

std::optional<std::vector<std::pair<std::size_t, FieldElem>>> IncrementalBasis::insert(
    const Point& x) {
    if (x.size() != dim_) throw usage_error("IncrementalBasis: wrong vector dimension");
    Point v = x;
    std::vector<FieldElem> mix(inserted_ + 1, field_.zero());
    mix[inserted_] = field_.one();
    for (const Row& row : rows_) {
        FieldElem f = v[row.pivot];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row.reduced[j];
        for (std::size_t j = 0; j < row.mix.size(); ++j) mix[j] -= f * row.mix[j];
    }
    ++inserted_;

    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
    if (pivot == dim_) {
        // v reduced to zero: sum mix[j] * inserted[j] = 0 with mix.back() = 1,
        // so x = -sum_{j<last} mix[j] * inserted[j].
        std::vector<std::pair<std::size_t, FieldElem>> expr;
        for (std::size_t j = 0; j + 1 < mix.size(); ++j)
            if (!mix[j].is_zero()) expr.emplace_back(j, -mix[j]);
        return expr;
    }

    FieldElem inv = v[pivot].inv();
    for (auto& c : v) c *= inv;
    for (auto& c : mix) c *= inv;
    rows_.push_back(Row{std::move(v), pivot, std::move(mix)});
    return std::nullopt;
}

}  // namespace ccomp
