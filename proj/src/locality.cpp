#include "ccomp/locality.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ccomp/errors.hpp"
#include "ccomp/poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccomp {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

std::size_t hamming_distance(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) throw usage_error("hamming distance of unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

bool in_hamming_ball(const std::vector<u64>& center, const std::vector<u64>& c, std::size_t r) {
    return hamming_distance(center, c) <= r;
}

AssociatedCode build_associated_code(const PrimeField& field, std::size_t arity, u32 degree) {
    const u64 q = field.modulus();
    double domain_size = 1;
    for (std::size_t i = 0; i < arity; ++i) domain_size *= double(q);
    if (domain_size > 32) throw budget_exceeded_error("domain larger than 32 points");
    const std::size_t n = static_cast<std::size_t>(domain_size);

    // Monomials of total degree <= d, lexicographic exponent order.
    std::vector<std::vector<u32>> monomials;
    std::vector<u32> exps(arity, 0);
    while (true) {
        u32 total = 0;
        for (u32 e : exps) total += e;
        if (total <= degree) monomials.push_back(exps);
        std::size_t i = arity;
        while (i > 0 && exps[i - 1] == degree) exps[--i] = 0;
        if (i == 0) break;
        ++exps[i - 1];
    }
    double class_size = 1;
    for (std::size_t i = 0; i < monomials.size(); ++i) class_size *= double(q);
    if (class_size > 1e4) throw budget_exceeded_error("function class larger than 10^4");

    AssociatedCode code;
    code.modulus = q;
    code.arity = arity;
    code.degree = degree;
    // Domain points in lex order, first coordinate most significant.
    std::vector<u64> coords(arity, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Point pt;
        pt.reserve(arity);
        for (u64 c : coords) pt.push_back(field.elem(c));
        code.domain.push_back(std::move(pt));
        std::size_t j = arity;
        while (j > 0 && coords[j - 1] == q - 1) coords[--j] = 0;
        if (j > 0) ++coords[j - 1];
    }

    // Precompute monomial value tables, then walk all coefficient vectors.
    std::vector<std::vector<FieldElem>> mono_at(monomials.size(),
                                                std::vector<FieldElem>(n, field.one()));
    for (std::size_t t = 0; t < monomials.size(); ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t v = 0; v < arity; ++v)
                if (monomials[t][v] != 0)
                    mono_at[t][i] = mono_at[t][i] * code.domain[i][v].pow(monomials[t][v]);

    std::set<std::vector<u64>> words;
    std::vector<u64> coeffs(monomials.size(), 0);
    while (true) {
        std::vector<u64> word(n, 0);
        for (std::size_t t = 0; t < monomials.size(); ++t) {
            if (coeffs[t] == 0) continue;
            FieldElem a = field.elem(coeffs[t]);
            for (std::size_t i = 0; i < n; ++i)
                word[i] = (a * mono_at[t][i] + field.elem(word[i])).value();
        }
        words.insert(std::move(word));
        std::size_t t = monomials.size();
        while (t > 0 && coeffs[t - 1] == q - 1) coeffs[--t] = 0;
        if (t == 0) break;
        ++coeffs[t - 1];
    }
    code.codewords.assign(words.begin(), words.end());
    return code;
}

namespace {

// Positions where two codewords differ, as a bitmask over the repeated
// symbols. Only pairs that differ on the target symbols constrain the query
// set: feasibility of J means every such pair stays distinguishable after s
// erasures, i.e. popcount(J & mask) >= s+1. The pair scan is the hot loop of
// the oracle; the set union of masks is order-independent, so the rows may be
// scanned on all cores.
std::vector<u32> bad_pair_masks(const RepeatedCode& code, const std::vector<std::size_t>& target,
                                Exec exec) {
    const std::size_t n = code.base.length();
    const auto& words = code.base.codewords;
    const std::int64_t count = static_cast<std::int64_t>(words.size());

    auto scan_row = [&](std::size_t a, std::set<u32>& masks) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            bool differ_on_target = false;
            for (std::size_t t : target)
                if (words[a][t] != words[b][t]) {
                    differ_on_target = true;
                    break;
                }
            if (!differ_on_target) continue;
            u32 base_mask = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (words[a][i] != words[b][i]) base_mask |= (1u << i);
            u32 mask = 0;
            for (std::size_t copy = 0; copy <= code.s; ++copy)
                mask |= base_mask << (copy * n);
            masks.insert(mask);
        }
    };

    std::set<u32> masks;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            std::set<u32> local;
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t a = 0; a < count; ++a) scan_row(static_cast<std::size_t>(a), local);
#pragma omp critical
            masks.merge(local);
        }
    } else {
        for (std::int64_t a = 0; a < count; ++a) scan_row(static_cast<std::size_t>(a), masks);
    }
    return {masks.begin(), masks.end()};
}

bool feasible(u32 candidate, const std::vector<u32>& masks, std::size_t s) {
    for (u32 m : masks)
        if (static_cast<std::size_t>(std::popcount(candidate & m)) < s + 1) return false;
    return true;
}

std::vector<u32> combinations_of_size(std::size_t total, std::size_t size) {
    std::vector<u32> out;
    if (size > total) return out;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        u32 mask = 0;
        for (std::size_t i : idx) mask |= (1u << i);
        out.push_back(mask);
        std::size_t d = size;
        while (d > 0 && idx[d - 1] == total - size + (d - 1)) --d;
        if (d == 0) break;
        ++idx[d - 1];
        for (std::size_t i = d; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace

SymbolLocality computational_locality_symbols(const RepeatedCode& code,
                                              const std::vector<std::size_t>& target_symbols,
                                              Exec exec) {
    const std::size_t n = code.base.length();
    const std::size_t total = code.length();
    if (total > 14) throw budget_exceeded_error("repeated code longer than 14 symbols");
    if (target_symbols.empty()) throw usage_error("empty target symbol set");
    for (std::size_t t : target_symbols)
        if (t >= n) throw usage_error("target symbol out of range");

    const std::vector<u32> masks = bad_pair_masks(code, target_symbols, exec);
    if (masks.empty()) return {0, {}};

    for (std::size_t size = 1; size <= total; ++size) {
        const std::vector<u32> candidates = combinations_of_size(total, size);
        std::int64_t first = -1;
        if (exec == Exec::parallel) {
            std::int64_t count = static_cast<std::int64_t>(candidates.size());
            std::int64_t winner = count;
#pragma omp parallel for reduction(min : winner) schedule(static)
            for (std::int64_t i = 0; i < count; ++i)
                if (feasible(candidates[i], masks, code.s) && i < winner) winner = i;
            if (winner < count) first = winner;
        } else {
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (feasible(candidates[i], masks, code.s)) {
                    first = static_cast<std::int64_t>(i);
                    break;
                }
        }
        if (first >= 0) {
            std::vector<std::size_t> witness;
            for (std::size_t j = 0; j < total; ++j)
                if (candidates[first] & (1u << j)) witness.push_back(j);
            return {size, witness};
        }
    }
    throw decoding_failure_error("no feasible query set exists");  // unreachable: full set works
}

CodeLocality computational_locality(const AssociatedCode& code, std::size_t k, std::size_t s,
                                    Exec exec) {
    const std::size_t n = code.length();
    if (k == 0 || k > n) throw usage_error("index set size out of range");
    RepeatedCode repeated{code, s};

    CodeLocality out{0, {}, {}};
    bool have = false;
    std::vector<std::size_t> index_set(k);
    for (std::size_t i = 0; i < k; ++i) index_set[i] = i;
    while (true) {
        SymbolLocality sym = computational_locality_symbols(repeated, index_set, exec);
        if (!have || sym.locality > out.locality) {
            out.locality = sym.locality;
            out.worst_index_set = index_set;
            out.witness = sym.witness;
            have = true;
        }
        std::size_t d = k;
        while (d > 0 && index_set[d - 1] == n - k + (d - 1)) --d;
        if (d == 0) break;
        ++index_set[d - 1];
        for (std::size_t i = d; i < k; ++i) index_set[i] = index_set[i - 1] + 1;
    }
    return out;
}

}  // namespace ccomp
