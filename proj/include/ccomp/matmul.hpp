#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccomp/field.hpp"
#include "ccomp/rng.hpp"

namespace ccomp {

struct FieldMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElem> a;  // row-major

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c, FieldElem fill)
        : rows(r), cols(c), a(r * c, fill) {}

    FieldElem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const FieldElem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const FieldMatrix& o) const;
};

FieldMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols,
                          SplitMix64& rng);
FieldMatrix matmul_direct(const FieldMatrix& a, const FieldMatrix& b);

enum class MatmulScheme { polynomial_code, matdot };

/// Coded matrix multiplication of square te x te matrices split into t
/// blocks. The polynomial code splits A by row-blocks and B by column-blocks
/// (workers multiply e x te by te x e, w = t^2 + s, decode reads every block
/// product off one coefficient each); MatDot splits A by column-blocks and B
/// by row-blocks (workers multiply te x e by e x te, w = 2t - 1 + s, decode
/// reads AB off the middle coefficient).
struct MatmulPlan {
    MatmulScheme scheme;
    u64 modulus;
    std::size_t t, e, s;
    std::vector<FieldElem> anchors;
    std::vector<std::pair<FieldMatrix, FieldMatrix>> worker_inputs;

    std::size_t workers() const { return anchors.size(); }
};

MatmulPlan polynomial_code_plan(const FieldMatrix& a, const FieldMatrix& b, std::size_t t,
                                std::size_t s);
MatmulPlan matdot_plan(const FieldMatrix& a, const FieldMatrix& b, std::size_t t, std::size_t s);

struct MatmulResponse {
    std::size_t worker;
    FieldMatrix product;
};

// Entry-wise interpolation of the worker-output polynomial from any
// sufficient response subset, then block reassembly (polynomial code) or
// coefficient extraction (MatDot).
FieldMatrix matmul_decode(const MatmulPlan& plan, const std::vector<MatmulResponse>& responses);

// Run every straggler pattern of size <= plan.s and compare each decode
// against the expected product.
struct MatmulVerification {
    std::size_t patterns = 0;
    std::size_t failures = 0;
};

MatmulVerification verify_matmul_all_drops(const MatmulPlan& plan, const FieldMatrix& expected);

}  // namespace ccomp
