#include "ccomp/json_io.hpp"

#include "ccomp/errors.hpp"

namespace ccomp {

namespace {

json elems_to_json(const std::vector<FieldElem>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.value());
    return out;
}

std::vector<FieldElem> elems_from_json(const json& j, u64 p) {
    std::vector<FieldElem> out;
    for (const auto& v : j) out.push_back(FieldElem(v.get<u64>(), p));
    return out;
}

json points_to_json(const std::vector<Point>& pts) {
    json out = json::array();
    for (const auto& pt : pts) out.push_back(elems_to_json(pt));
    return out;
}

std::vector<Point> points_from_json(const json& j, u64 p) {
    std::vector<Point> out;
    for (const auto& pt : j) out.push_back(elems_from_json(pt, p));
    return out;
}

SchemeTag tag_from_name(const std::string& name) {
    for (SchemeTag tag :
         {SchemeTag::replication, SchemeTag::lcc, SchemeTag::curve_direct, SchemeTag::homogeneous,
          SchemeTag::nonhomogeneous, SchemeTag::intersecting, SchemeTag::composite})
        if (scheme_name(tag) == name) return tag;
    throw usage_error("unknown scheme tag '" + name + "'");
}

json dependency_to_json(const Dependency& dep) {
    return json{{"indices", dep.indices}, {"coeffs", elems_to_json(dep.coeffs)}};
}

Dependency dependency_from_json(const json& j, u64 p) {
    Dependency dep;
    dep.indices = j.at("indices").get<std::vector<std::size_t>>();
    dep.coeffs = elems_from_json(j.at("coeffs"), p);
    return dep;
}

json meta_to_json(const QueryPlan& plan);

json curve_meta_to_json(const CurveMeta& m) {
    json out{{"kind", "curve"},
             {"query_anchors", elems_to_json(m.query_anchors)},
             {"output_anchors", elems_to_json(m.output_anchors)},
             {"degree_bound", m.degree_bound},
             {"response_scale", elems_to_json(m.response_scale)},
             {"output_unscale", elems_to_json(m.output_unscale)},
             {"deg_f", m.deg_f}};
    if (!m.lambdas.empty()) out["lambdas"] = elems_to_json(m.lambdas);
    if (!m.r_coords.empty()) out["r_coords"] = elems_to_json(m.r_coords);
    if (m.dependency) out["dependency"] = dependency_to_json(*m.dependency);
    return out;
}

json meta_to_json(const QueryPlan& plan) {
    return std::visit(
        [&](const auto& m) -> json {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, ReplicationMeta>) {
                return json{{"kind", "replication"},
                            {"group_count", m.group_count},
                            {"copies", m.copies}};
            } else if constexpr (std::is_same_v<M, CurveMeta>) {
                return curve_meta_to_json(m);
            } else if constexpr (std::is_same_v<M, IntersectingMeta>) {
                return json{{"kind", "intersecting"},
                            {"group1_size", m.group1_size},
                            {"anchors1", elems_to_json(m.anchors1)},
                            {"anchors2", elems_to_json(m.anchors2)},
                            {"degree_bound1", m.degree_bound1},
                            {"degree_bound2", m.degree_bound2},
                            {"z1", m.z1.value()},
                            {"z2", m.z2.value()},
                            {"output_anchors1", elems_to_json(m.output_anchors1)},
                            {"output_anchors2", elems_to_json(m.output_anchors2)}};
            } else {
                json subs = json::array();
                for (const auto& sp : m.subplans) subs.push_back(plan_to_json(sp));
                return json{{"kind", "composite"}, {"subplans", subs}};
            }
        },
        plan.meta);
}

DecodeMeta meta_from_json(const json& j, u64 p) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "replication") {
        return ReplicationMeta{j.at("group_count").get<std::size_t>(),
                               j.at("copies").get<std::size_t>()};
    }
    if (kind == "curve") {
        CurveMeta m;
        m.query_anchors = elems_from_json(j.at("query_anchors"), p);
        m.output_anchors = elems_from_json(j.at("output_anchors"), p);
        m.degree_bound = j.at("degree_bound").get<std::size_t>();
        m.response_scale = elems_from_json(j.at("response_scale"), p);
        m.output_unscale = elems_from_json(j.at("output_unscale"), p);
        m.deg_f = j.at("deg_f").get<u32>();
        if (j.contains("lambdas")) m.lambdas = elems_from_json(j.at("lambdas"), p);
        if (j.contains("r_coords")) m.r_coords = elems_from_json(j.at("r_coords"), p);
        if (j.contains("dependency")) m.dependency = dependency_from_json(j.at("dependency"), p);
        return m;
    }
    if (kind == "intersecting") {
        IntersectingMeta m;
        m.group1_size = j.at("group1_size").get<std::size_t>();
        m.anchors1 = elems_from_json(j.at("anchors1"), p);
        m.anchors2 = elems_from_json(j.at("anchors2"), p);
        m.degree_bound1 = j.at("degree_bound1").get<std::size_t>();
        m.degree_bound2 = j.at("degree_bound2").get<std::size_t>();
        m.z1 = FieldElem(j.at("z1").get<u64>(), p);
        m.z2 = FieldElem(j.at("z2").get<u64>(), p);
        m.output_anchors1 = elems_from_json(j.at("output_anchors1"), p);
        m.output_anchors2 = elems_from_json(j.at("output_anchors2"), p);
        return m;
    }
    if (kind == "composite") {
        CompositeMeta m;
        for (const auto& sp : j.at("subplans")) m.subplans.push_back(plan_from_json(sp));
        return m;
    }
    throw usage_error("unknown decode meta kind '" + kind + "'");
}

}  // namespace

json plan_to_json(const QueryPlan& plan) {
    return json{{"modulus", plan.modulus},
                {"scheme", scheme_name(plan.tag)},
                {"s", plan.s},
                {"b", plan.b},
                {"workers", plan.workers()},
                {"baseline_oblivious", plan.baseline_oblivious},
                {"queries", points_to_json(plan.queries)},
                {"output_indices", plan.output_indices},
                {"decode", meta_to_json(plan)}};
}

QueryPlan plan_from_json(const json& j) {
    QueryPlan plan;
    plan.modulus = j.at("modulus").get<u64>();
    plan.tag = tag_from_name(j.at("scheme").get<std::string>());
    plan.s = j.at("s").get<std::size_t>();
    plan.b = j.at("b").get<std::size_t>();
    plan.queries = points_from_json(j.at("queries"), plan.modulus);
    plan.output_indices = j.at("output_indices").get<std::vector<std::size_t>>();
    plan.baseline_oblivious = j.at("baseline_oblivious").get<std::size_t>();
    plan.meta = meta_from_json(j.at("decode"), plan.modulus);
    return plan;
}

json report_to_json(const RunReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back(json{{"pattern", f.pattern},
                                {"dropped", f.dropped},
                                {"corrupted", f.corrupted},
                                {"variant", f.variant},
                                {"error", f.error}});
    return json{{"scheme", report.scheme},
                {"workers", report.workers},
                {"k", report.k},
                {"s", report.s},
                {"b", report.b},
                {"baseline_oblivious", report.baseline_oblivious},
                {"patterns_tested", report.patterns_tested},
                {"sampled", report.sampled},
                {"failures", failures},
                {"seed", report.seed},
                {"wall_ms", report.wall_ms}};
}

}  // namespace ccomp
