#include "ccomp/matmul.hpp"

#include <algorithm>

#include "ccomp/errors.hpp"
#include "ccomp/poly.hpp"

namespace ccomp {

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

FieldMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                          SplitMix64& rng) {
    FieldMatrix m(rows, cols, field.zero());
    for (auto& c : m.a) c = field.elem(rng.below(field.modulus()));
    return m;
}

FieldMatrix matmul_direct(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols != b.rows) throw usage_error("matrix product dimension mismatch");
    if (a.a.empty() || b.a.empty()) throw usage_error("empty matrix");
    FieldMatrix c(a.rows, b.cols, FieldElem(0, a.a[0].modulus()));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            const FieldElem& v = a.at(i, l);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(l, j);
        }
    return c;
}

namespace {

std::size_t check_split(const FieldMatrix& a, const FieldMatrix& b, std::size_t t) {
    if (t == 0) throw usage_error("split parameter t must be positive");
    if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows)
        throw usage_error("coded matmul needs two square matrices of equal size");
    if (a.rows % t != 0) throw usage_error("split parameter t must divide the matrix size");
    return a.rows / t;  // block height e
}

FieldMatrix row_block(const FieldMatrix& m, std::size_t i, std::size_t e) {
    FieldMatrix out(e, m.cols, FieldElem(0, m.a[0].modulus()));
    for (std::size_t r = 0; r < e; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(i * e + r, c);
    return out;
}

FieldMatrix col_block(const FieldMatrix& m, std::size_t j, std::size_t e) {
    FieldMatrix out(m.rows, e, FieldElem(0, m.a[0].modulus()));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < e; ++c) out.at(r, c) = m.at(r, j * e + c);
    return out;
}

// Evaluate sum_i blocks[i] * z^{powers[i]} at z.
FieldMatrix eval_matrix_poly(const std::vector<FieldMatrix>& blocks,
                             const std::vector<std::size_t>& powers, const FieldElem& z) {
    FieldMatrix acc(blocks[0].rows, blocks[0].cols, FieldElem(0, z.modulus()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        FieldElem zp = z.pow(powers[i]);
        for (std::size_t j = 0; j < acc.a.size(); ++j) acc.a[j] += blocks[i].a[j] * zp;
    }
    return acc;
}

MatmulPlan build_plan(MatmulScheme scheme, const FieldMatrix& a, const FieldMatrix& b,
                      std::size_t t, std::size_t s) {
    const std::size_t e = check_split(a, b, t);
    const u64 p = a.a[0].modulus();
    const PrimeField field(p);
    const std::size_t w =
        scheme == MatmulScheme::polynomial_code ? t * t + s : 2 * t - 1 + s;
    if (p < w) throw field_too_small_error(w, p);

    std::vector<FieldMatrix> a_blocks, b_blocks;
    std::vector<std::size_t> a_powers, b_powers;
    for (std::size_t i = 0; i < t; ++i) {
        if (scheme == MatmulScheme::polynomial_code) {
            a_blocks.push_back(row_block(a, i, e));   // e x te
            b_blocks.push_back(col_block(b, i, e));   // te x e
            a_powers.push_back(i);
            b_powers.push_back(i * t);
        } else {
            a_blocks.push_back(col_block(a, i, e));   // te x e
            b_blocks.push_back(row_block(b, i, e));   // e x te
            a_powers.push_back(i);
            b_powers.push_back(t - 1 - i);
        }
    }

    MatmulPlan plan;
    plan.scheme = scheme;
    plan.modulus = p;
    plan.t = t;
    plan.e = e;
    plan.s = s;
    plan.anchors = field.enumerate(w);
    plan.worker_inputs.reserve(w);
    for (const auto& z : plan.anchors)
        plan.worker_inputs.emplace_back(eval_matrix_poly(a_blocks, a_powers, z),
                                        eval_matrix_poly(b_blocks, b_powers, z));
    return plan;
}

}  // namespace

MatmulPlan polynomial_code_plan(const FieldMatrix& a, const FieldMatrix& b, std::size_t t,
                                std::size_t s) {
    return build_plan(MatmulScheme::polynomial_code, a, b, t, s);
}

MatmulPlan matdot_plan(const FieldMatrix& a, const FieldMatrix& b, std::size_t t, std::size_t s) {
    return build_plan(MatmulScheme::matdot, a, b, t, s);
}

FieldMatrix matmul_decode(const MatmulPlan& plan, const std::vector<MatmulResponse>& responses) {
    const std::size_t t = plan.t, e = plan.e;
    const bool poly_code = plan.scheme == MatmulScheme::polynomial_code;
    const std::size_t degree = poly_code ? t * t - 1 : 2 * t - 2;
    if (responses.size() < degree + 1)
        throw insufficient_responses_error(degree + 1, responses.size());
    const std::size_t out_rows = poly_code ? e : t * e;
    const std::size_t out_cols = out_rows;

    // Flatten each worker product into one sample of a vector-valued
    // polynomial and reuse curve interpolation (with its consistency check on
    // surplus samples).
    std::vector<Sample> samples;
    samples.reserve(responses.size());
    for (const auto& r : responses) {
        if (r.worker >= plan.workers()) throw usage_error("response from unknown worker");
        if (r.product.rows != out_rows || r.product.cols != out_cols)
            throw usage_error("worker product has wrong shape");
        samples.push_back(Sample{plan.anchors[r.worker], r.product.a});
    }
    Curve fitted = interpolate(samples, degree);

    const PrimeField field(plan.modulus);
    auto coeff_matrix = [&](std::size_t power) {
        FieldMatrix m(out_rows, out_cols, field.zero());
        if (power < fitted.coefficients().size()) m.a = fitted.coefficients()[power];
        return m;
    };

    if (!poly_code) return coeff_matrix(t - 1);  // AB sits on the middle power

    FieldMatrix product(t * e, t * e, field.zero());
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            FieldMatrix block = coeff_matrix(i + j * t);  // A_i B_j
            for (std::size_t r = 0; r < e; ++r)
                for (std::size_t c = 0; c < e; ++c)
                    product.at(i * e + r, j * e + c) = block.at(r, c);
        }
    return product;
}

MatmulVerification verify_matmul_all_drops(const MatmulPlan& plan, const FieldMatrix& expected) {
    const std::size_t w = plan.workers();
    std::vector<FieldMatrix> products;
    products.reserve(w);
    for (const auto& [wa, wb] : plan.worker_inputs) products.push_back(matmul_direct(wa, wb));

    MatmulVerification out;
    std::vector<std::size_t> drops;
    auto check = [&]() {
        ++out.patterns;
        std::vector<MatmulResponse> responses;
        for (std::size_t i = 0; i < w; ++i)
            if (std::find(drops.begin(), drops.end(), i) == drops.end())
                responses.push_back(MatmulResponse{i, products[i]});
        try {
            if (!(matmul_decode(plan, responses) == expected)) ++out.failures;
        } catch (const std::exception&) {
            ++out.failures;
        }
    };
    check();
    for (std::size_t size = 1; size <= std::min(w, plan.s); ++size) {
        drops.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) drops[i] = i;
        while (true) {
            check();
            std::size_t d = size;
            while (d > 0 && drops[d - 1] == w - size + (d - 1)) --d;
            if (d == 0) break;
            ++drops[d - 1];
            for (std::size_t i = d; i < size; ++i) drops[i] = drops[i - 1] + 1;
        }
    }
    return out;
}

}  // namespace ccomp
