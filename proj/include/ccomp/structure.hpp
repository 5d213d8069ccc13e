#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ccomp/field.hpp"
#include "ccomp/poly.hpp"

namespace ccomp {

// In affine mode every point X is lifted to (1, X) before any rank
// processing; dependencies then hold over the lifted vectors.
enum class DepMode { homogeneous, affine };

/// Minimal linear dependency: sum coeffs[j] * P[indices[j]] = P[indices.back()]
/// (over lifted points in affine mode), every coefficient nonzero, and no
/// strict subset of the indexed points dependent.
struct Dependency {
    std::vector<size_t> indices;     // k point indices, dependent point last
    std::vector<FieldElem> coeffs;   // k-1 nonzero coefficients
};

bool verify_dependency(const std::vector<Point>& points, const Dependency& dep, DepMode mode);

Point lift_affine(const Point& x);

/// Incremental Gaussian elimination over the points in index order; the first
/// point whose rank does not increase yields the dependency, expressed over
/// the current pivots. The support of that expression is automatically
/// minimal. Homogeneous mode rejects zero vectors.
std::optional<Dependency> find_minimal_dependency(const std::vector<Point>& points, DepMode mode);

/// Greedy partition into minimal dependent sets plus independent leftovers.
struct Partition {
    std::vector<Dependency> dependent_sets;
    std::vector<size_t> leftovers;
    DepMode mode;
};

Partition partition_minimal_dependent(const std::vector<Point>& points, DepMode mode);

/// Search for a linearly dependent subset of size <= 2e among nonzero points.
/// Gaussian elimination is tried first; if every elimination-found dependency
/// is larger than 2e, fall back to hashing all e-subset linear combinations
/// with nonzero coefficients (bounded to e <= 3 and <= 10^7 combinations).
struct SparseSearch {
    std::optional<Dependency> dependency;
    bool budget_exceeded = false;
};

SparseSearch find_sparse_dependency(const std::vector<Point>& points, std::size_t e);

struct Collinear {
    std::array<std::size_t, 3> indices;
    Curve line;
    std::array<FieldElem, 3> anchors;  // line(anchors[i]) = points[indices[i]]
};

struct Crossing {
    std::array<std::size_t, 4> indices;  // first two on line1, last two on line2
    Curve line1, line2;
    FieldElem z1, z2;  // line1(z1) = line2(z2), off all four points
    std::array<FieldElem, 4> anchors;
};

using LineStructure = std::variant<Collinear, Crossing>;

/// Look for three collinear input points, or failing that, four points on two
/// lines that intersect away from all four. Collinear wins when both exist.
/// Ties broken towards the lowest point indices. Bounded to 512 points.
std::optional<LineStructure> find_intersecting_lines(const std::vector<Point>& points);

}  // namespace ccomp
