#include "ccomp/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccomp/errors.hpp"
#include "ccomp/linalg.hpp"

namespace ccomp {

Point lift_affine(const Point& x) {
    if (x.empty()) throw usage_error("cannot lift an empty point");
    Point out;
    out.reserve(x.size() + 1);
    out.push_back(FieldElem(1, x[0].modulus()));
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

namespace {

Point mode_view(const Point& x, DepMode mode) {
    return mode == DepMode::affine ? lift_affine(x) : x;
}

std::vector<u64> point_key(const Point& x) {
    std::vector<u64> key;
    key.reserve(x.size());
    for (const auto& c : x) key.push_back(c.value());
    return key;
}

}  // namespace

bool verify_dependency(const std::vector<Point>& points, const Dependency& dep, DepMode mode) {
    if (dep.indices.size() < 2 || dep.coeffs.size() + 1 != dep.indices.size()) return false;
    for (const auto& c : dep.coeffs)
        if (c.is_zero()) return false;
    for (std::size_t idx : dep.indices)
        if (idx >= points.size()) return false;
    Point target = mode_view(points[dep.indices.back()], mode);
    Point acc(target.size(), FieldElem(0, target[0].modulus()));
    for (std::size_t j = 0; j + 1 < dep.indices.size(); ++j) {
        Point term = mode_view(points[dep.indices[j]], mode);
        if (term.size() != target.size()) return false;
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += dep.coeffs[j] * term[c];
    }
    return points_equal(acc, target);
}

std::optional<Dependency> find_minimal_dependency(const std::vector<Point>& points, DepMode mode) {
    if (points.empty()) return std::nullopt;
    const std::size_t dim = points[0].size() + (mode == DepMode::affine ? 1 : 0);
    const PrimeField field(points[0][0].modulus());
    IncrementalBasis basis(dim, field);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != points[0].size())
            throw usage_error("points of mixed dimension");
        if (mode == DepMode::homogeneous && point_is_zero(points[i]))
            throw usage_error("zero vector rejected in homogeneous mode (index " +
                              std::to_string(i) + ")");
        auto expr = basis.insert(mode_view(points[i], mode));
        if (!expr) continue;
        Dependency dep;
        for (const auto& [j, coeff] : *expr) {
            dep.indices.push_back(j);
            dep.coeffs.push_back(coeff);
        }
        dep.indices.push_back(i);
        return dep;
    }
    return std::nullopt;
}

Partition partition_minimal_dependent(const std::vector<Point>& points, DepMode mode) {
    Partition out;
    out.mode = mode;
    std::vector<std::size_t> remaining(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) remaining[i] = i;

    while (true) {
        std::vector<Point> sub;
        sub.reserve(remaining.size());
        for (std::size_t idx : remaining) sub.push_back(points[idx]);
        auto dep = find_minimal_dependency(sub, mode);
        if (!dep) break;
        Dependency mapped;
        mapped.coeffs = dep->coeffs;
        std::set<std::size_t> used;
        for (std::size_t local : dep->indices) {
            mapped.indices.push_back(remaining[local]);
            used.insert(local);
        }
        out.dependent_sets.push_back(std::move(mapped));
        std::vector<std::size_t> next;
        for (std::size_t local = 0; local < remaining.size(); ++local)
            if (!used.count(local)) next.push_back(remaining[local]);
        remaining = std::move(next);
    }
    out.leftovers = std::move(remaining);
    return out;
}

SparseSearch find_sparse_dependency(const std::vector<Point>& points, std::size_t e) {
    if (e < 2) throw usage_error("sparse dependency search needs e >= 2");
    if (points.empty()) return {};
    for (std::size_t i = 0; i < points.size(); ++i)
        if (point_is_zero(points[i]))
            throw usage_error("zero vector in sparse dependency search (index " +
                              std::to_string(i) + ")");
    const std::size_t k = points.size();
    const std::size_t dim = points[0].size();
    const PrimeField field(points[0][0].modulus());
    const u64 q = field.modulus();

    // Elimination pass: every dependent insertion yields a candidate; keep the
    // smallest one.
    std::optional<Dependency> best;
    {
        IncrementalBasis basis(dim, field);
        for (std::size_t i = 0; i < k; ++i) {
            auto expr = basis.insert(points[i]);
            if (!expr) continue;
            if (!best || expr->size() + 1 < best->indices.size()) {
                Dependency dep;
                for (const auto& [j, coeff] : *expr) {
                    dep.indices.push_back(j);
                    dep.coeffs.push_back(coeff);
                }
                dep.indices.push_back(i);
                best = std::move(dep);
            }
        }
        if (best && best->indices.size() <= 2 * e) return {best, false};
        if (!best) return {};  // full rank: no dependent subset exists at all
    }

    // Birthday fallback: hash all nonzero-coefficient combinations of e-subsets.
    // A repeated sum (or a zero sum) exhibits a dependent subset of size <= 2e.
    auto normalize = [&](const std::set<std::size_t>& support) -> Dependency {
        std::vector<std::size_t> idx(support.begin(), support.end());
        std::vector<Point> sub;
        for (std::size_t i : idx) sub.push_back(points[i]);
        auto dep = find_minimal_dependency(sub, DepMode::homogeneous);
        if (!dep) throw std::logic_error("dependent support lost its dependency");
        Dependency mapped;
        mapped.coeffs = dep->coeffs;
        for (std::size_t local : dep->indices) mapped.indices.push_back(idx[local]);
        return mapped;
    };

    double combos = 1.0;
    for (std::size_t i = 0; i < e; ++i) combos *= double(k - i) / double(i + 1);
    for (std::size_t i = 0; i < e; ++i) combos *= double(q - 1);
    if (e > 3 || combos > 1e7) return {std::nullopt, true};

    std::map<std::vector<u64>, std::pair<std::vector<std::size_t>, std::vector<u64>>> seen;
    std::vector<std::size_t> subset(e);
    for (std::size_t i = 0; i < e; ++i) subset[i] = i;
    while (true) {
        std::vector<u64> alpha(e, 1);
        while (true) {
            Point sum(dim, field.zero());
            for (std::size_t i = 0; i < e; ++i) {
                FieldElem a(alpha[i], q);
                for (std::size_t c = 0; c < dim; ++c) sum[c] += a * points[subset[i]][c];
            }
            if (point_is_zero(sum)) {
                std::set<std::size_t> support(subset.begin(), subset.end());
                return {normalize(support), false};
            }
            auto key = point_key(sum);
            auto it = seen.find(key);
            if (it != seen.end()) {
                const auto& [other, other_alpha] = it->second;
                std::set<std::size_t> support;
                // Coefficients on the overlap may cancel; keep only live terms.
                for (std::size_t i = 0; i < e; ++i) {
                    auto pos = std::find(other.begin(), other.end(), subset[i]);
                    u64 oa = pos == other.end() ? 0 : other_alpha[pos - other.begin()];
                    if (alpha[i] != oa) support.insert(subset[i]);
                }
                for (std::size_t i = 0; i < e; ++i)
                    if (std::find(subset.begin(), subset.end(), other[i]) == subset.end())
                        support.insert(other[i]);
                if (support.size() >= 2) return {normalize(support), false};
            } else {
                seen.emplace(std::move(key), std::make_pair(subset, alpha));
            }
            std::size_t d = e;
            while (d > 0 && alpha[d - 1] == q - 1) alpha[--d] = 1;
            if (d == 0) break;
            ++alpha[d - 1];
        }
        std::size_t d = e;
        while (d > 0 && subset[d - 1] == k - e + (d - 1)) --d;
        if (d == 0) break;
        ++subset[d - 1];
        for (std::size_t i = d; i < e; ++i) subset[i] = subset[i - 1] + 1;
    }
    return {};
}

namespace {

struct CanonicalLine {
    Point base;  // coordinate at the pivot is zero
    Point dir;   // first nonzero coordinate is one
    std::size_t pivot;
};

CanonicalLine canonical_line(const Point& a, const Point& b) {
    const u64 p = a[0].modulus();
    Point dir(a.size(), FieldElem(0, p));
    for (std::size_t c = 0; c < a.size(); ++c) dir[c] = b[c] - a[c];
    std::size_t pivot = 0;
    while (dir[pivot].is_zero()) ++pivot;
    FieldElem inv = dir[pivot].inv();
    for (auto& c : dir) c *= inv;
    Point base = a;
    FieldElem t = a[pivot];
    for (std::size_t c = 0; c < a.size(); ++c) base[c] -= t * dir[c];
    return {std::move(base), std::move(dir), pivot};
}

Curve line_curve(const CanonicalLine& l) {
    return Curve(l.base.size(), l.base[0].modulus(), {l.base, l.dir});
}

}  // namespace

std::optional<LineStructure> find_intersecting_lines(const std::vector<Point>& points) {
    const std::size_t k = points.size();
    if (k > 512) throw budget_exceeded_error("line search bounded to 512 points");
    if (k < 3) return std::nullopt;
    const std::size_t m = points[0].size();
    const u64 p = points[0][0].modulus();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (points_equal(points[i], points[j]))
                throw usage_error("line search needs distinct points");

    // Bucket the C(k,2) lines by canonical form.
    std::map<std::vector<u64>, std::pair<CanonicalLine, std::set<std::size_t>>> buckets;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            CanonicalLine line = canonical_line(points[i], points[j]);
            std::vector<u64> key = point_key(line.base);
            std::vector<u64> dkey = point_key(line.dir);
            key.insert(key.end(), dkey.begin(), dkey.end());
            auto [it, fresh] = buckets.try_emplace(std::move(key), line, std::set<std::size_t>{});
            it->second.second.insert(i);
            it->second.second.insert(j);
        }
    }

    // Three input points on one line, lowest index triple first.
    std::optional<Collinear> best;
    for (const auto& [key, bucket] : buckets) {
        const auto& [line, members] = bucket;
        if (members.size() < 3) continue;
        std::array<std::size_t, 3> triple{};
        std::copy_n(members.begin(), 3, triple.begin());
        if (!best || triple < best->indices) {
            std::array<FieldElem, 3> anchors{FieldElem(0, p), FieldElem(0, p), FieldElem(0, p)};
            for (std::size_t t = 0; t < 3; ++t) anchors[t] = points[triple[t]][line.pivot];
            best = Collinear{triple, line_curve(line), anchors};
        }
    }
    if (best) return LineStructure{*best};

    // No collinear triple, so every bucket is one line through exactly two
    // points. Scan disjoint line pairs for an intersection off all four.
    struct LineRec {
        std::array<std::size_t, 2> idx;
        CanonicalLine line;
    };
    std::vector<LineRec> lines;
    lines.reserve(buckets.size());
    for (const auto& [key, bucket] : buckets) {
        const auto& [line, members] = bucket;
        std::array<std::size_t, 2> idx{};
        std::copy_n(members.begin(), 2, idx.begin());
        lines.push_back(LineRec{idx, line});
    }
    std::sort(lines.begin(), lines.end(),
              [](const LineRec& a, const LineRec& b) { return a.idx < b.idx; });

    const PrimeField field(p);
    auto try_pair = [&](const LineRec& a, const LineRec& b) -> std::optional<Crossing> {
        if (a.idx[0] == b.idx[0] || a.idx[0] == b.idx[1] || a.idx[1] == b.idx[0] ||
            a.idx[1] == b.idx[1])
            return std::nullopt;
        // Solve base_a + t dir_a = base_b + u dir_b.
        std::vector<std::vector<FieldElem>> sys(m, std::vector<FieldElem>(2, field.zero()));
        std::vector<FieldElem> rhs(m, field.zero());
        for (std::size_t c = 0; c < m; ++c) {
            sys[c][0] = a.line.dir[c];
            sys[c][1] = -b.line.dir[c];
            rhs[c] = b.line.base[c] - a.line.base[c];
        }
        auto sol = gf_solve(std::move(sys), std::move(rhs));
        if (!sol) return std::nullopt;
        FieldElem t = (*sol)[0], u = (*sol)[1];
        Point cross = line_curve(a.line).eval(t);
        for (std::size_t ii : {a.idx[0], a.idx[1], b.idx[0], b.idx[1]})
            if (points_equal(cross, points[ii])) return std::nullopt;
        std::array<std::size_t, 4> idx{a.idx[0], a.idx[1], b.idx[0], b.idx[1]};
        std::array<FieldElem, 4> anchors{
            points[idx[0]][a.line.pivot], points[idx[1]][a.line.pivot],
            points[idx[2]][b.line.pivot], points[idx[3]][b.line.pivot]};
        return Crossing{idx, line_curve(a.line), line_curve(b.line), t, u, anchors};
    };

    const std::size_t n_lines = lines.size();
    if (n_lines * n_lines <= 4'000'000) {
        for (std::size_t a = 0; a < n_lines; ++a)
            for (std::size_t b = a + 1; b < n_lines; ++b)
                if (auto crossing = try_pair(lines[a], lines[b])) return LineStructure{*crossing};
        return std::nullopt;
    }

    if (p <= 4096 && n_lines * p <= 20'000'000) {
        // Small field: enumerate each line's q points and collect line pairs
        // meeting at a shared point, then test pairs in index order.
        std::map<std::vector<u64>, std::vector<std::size_t>> incidence;
        for (std::size_t l = 0; l < n_lines; ++l) {
            Curve c = line_curve(lines[l].line);
            for (u64 t = 0; t < p; ++t)
                incidence[point_key(c.eval(field.elem(t)))].push_back(l);
        }
        std::set<std::pair<std::size_t, std::size_t>> candidates;
        for (const auto& [key, ls] : incidence)
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (std::size_t j = i + 1; j < ls.size(); ++j)
                    candidates.emplace(std::min(ls[i], ls[j]), std::max(ls[i], ls[j]));
        for (const auto& [a, b] : candidates)
            if (auto crossing = try_pair(lines[a], lines[b])) return LineStructure{*crossing};
        return std::nullopt;
    }

    throw budget_exceeded_error("too many candidate lines for intersection search");
}

}  // namespace ccomp
