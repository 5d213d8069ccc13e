#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccomp/field.hpp"
#include "ccomp/poly.hpp"
#include "ccomp/structure.hpp"

namespace ccomp {

enum class SchemeTag {
    replication,
    lcc,
    curve_direct,
    homogeneous,
    nonhomogeneous,
    intersecting,
    composite,
};

std::string scheme_name(SchemeTag tag);

// Worker count every input-oblivious scheme needs for the same job:
// min(k(s+2b+1), (k-1)d + s+2b+1).
std::size_t oblivious_threshold(std::size_t k, u32 deg_f, std::size_t s, std::size_t b);

// Each input queried s+2b+1 times, decoded by strict majority per group.
struct ReplicationMeta {
    std::size_t group_count;
    std::size_t copies;
};

// One curve sample per worker: sample_i = response_i * response_scale_i at
// anchor query_anchors_i; robust-interpolate to degree_bound with the plan's
// corruption budget, then output_j = h(output_anchors_j) * output_unscale_j.
// The lambda/r/dependency fields record how the scales were derived.
struct CurveMeta {
    std::vector<FieldElem> query_anchors;
    std::vector<FieldElem> output_anchors;
    std::size_t degree_bound;
    std::vector<FieldElem> response_scale;
    std::vector<FieldElem> output_unscale;
    u32 deg_f = 0;
    std::vector<FieldElem> lambdas;       // homogeneous / nonhomogeneous only
    std::vector<FieldElem> r_coords;      // nonhomogeneous only: first curve coordinate per query
    std::optional<Dependency> dependency;
};

// Two query groups on two curves meeting at (z1, z2). Whichever group has
// enough responses decodes first; its value at the intersection is a free
// clean sample for the other group.
struct IntersectingMeta {
    std::size_t group1_size;
    std::vector<FieldElem> anchors1, anchors2;
    std::size_t degree_bound1, degree_bound2;
    FieldElem z1, z2;
    std::vector<FieldElem> output_anchors1, output_anchors2;
};

struct QueryPlan;

struct CompositeMeta {
    std::vector<QueryPlan> subplans;  // queries of the parent are their concatenation
};

using DecodeMeta = std::variant<ReplicationMeta, CurveMeta, IntersectingMeta, CompositeMeta>;

/// The full encode/decode contract: one evaluation point per worker, the
/// tolerated straggler/byzantine budget, and everything the decoder needs.
struct QueryPlan {
    u64 modulus = 0;
    SchemeTag tag = SchemeTag::replication;
    std::vector<Point> queries;
    std::size_t s = 0, b = 0;
    std::vector<std::size_t> output_indices;  // original input index per output
    std::size_t baseline_oblivious = 0;
    DecodeMeta meta;

    std::size_t workers() const { return queries.size(); }
};

struct Response {
    std::size_t worker;
    Point value;
};

struct DecodeResult {
    std::vector<Point> outputs;  // aligned with plan.output_indices
    std::vector<std::size_t> used_responses;
};

// deg_f only feeds the oblivious baseline; replication itself needs no
// function knowledge.
QueryPlan plan_replication(const PrimeField& field, const std::vector<Point>& inputs,
                           std::size_t s, std::size_t b, std::optional<u32> deg_f = {});

// Cheaper of replication and querying along the degree <= k-1 curve through
// the inputs (ties go to the curve). Curve branch is systematic: the first k
// queries are the inputs themselves.
QueryPlan plan_lcc(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                   std::size_t b);

// Inputs already lie on a known curve at known anchors; query the curve
// directly with deg(f)*deg(curve) + s+2b+1 workers.
QueryPlan plan_curve_direct(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                            std::size_t b, const Curve& curve,
                            const std::vector<FieldElem>& input_anchors);

// Homogeneous f over one minimal dependent set: scale the dependent points
// onto a degree <= k-2 curve, query it with (k-2)deg(f) + s+2b+1 workers, undo
// the scaling after decoding. Systematic in its first min(k, w) queries.
QueryPlan plan_homogeneous(const MultiPoly& f, const std::vector<Point>& inputs,
                           const Dependency& dep, std::size_t s, std::size_t b);

// Arbitrary f whose lifted points (1, X) form a minimal dependent set: run
// the homogeneous construction on the homogenization, querying f itself at
// the de-homogenized points. Anchors whose first curve coordinate vanishes
// are skipped.
QueryPlan plan_nonhomogeneous(const MultiPoly& f, const std::vector<Point>& inputs,
                              const Dependency& dep, std::size_t s, std::size_t b);

// Four (or more) points on two crossing curves; the shared intersection value
// saves two workers versus planning each curve independently. Requires s >= 1
// (with s = 0 neither curve can be decoded first).
QueryPlan plan_intersecting(const MultiPoly& f, const std::vector<Point>& inputs,
                            const Crossing& crossing, std::size_t s, std::size_t b = 0);

// Partition the inputs into minimal dependent sets (homogeneous mode when f
// is homogeneous, else over the lifted points) and plan each set with the
// matching scheme; leftovers are replicated. Every subplan provisions the
// full (s, b) since failures may concentrate.
QueryPlan plan_composite(const MultiPoly& f, const std::vector<Point>& inputs, std::size_t s,
                         std::size_t b);

/// Decode any plan from >= w - s responses with at most b corrupted ones.
/// Outputs equal direct evaluation of f at the planned inputs, for every
/// admissible straggler/corruption pattern.
DecodeResult decode(const QueryPlan& plan, const std::vector<Response>& responses);

}  // namespace ccomp
