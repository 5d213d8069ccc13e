#pragma once

#include <cstdint>
#include <vector>

#include "ccomp/field.hpp"
#include "ccomp/rng.hpp"

namespace ccomp {

struct Term {
    std::vector<u32> exps;  // one exponent per variable
    FieldElem coeff;
};

/// Sparse multivariate polynomial f : F^m -> F^u, stored as u scalar
/// components. Terms are normalized: duplicate exponent vectors merged,
/// zero coefficients dropped. The total degree is the maximum term degree
/// across all components; the zero polynomial has degree 0.
class MultiPoly {
public:
    static MultiPoly from_components(const PrimeField& field, std::size_t arity,
                                     std::vector<std::vector<Term>> components);

    // Seeded generator used by tests and scenario files. Guarantees the total
    // degree is exactly `degree` (unless degree 0). With `homogeneous`, every
    // term has full degree.
    static MultiPoly random(const PrimeField& field, std::size_t arity, std::size_t out_dim,
                            u32 degree, std::size_t terms_per_component, bool homogeneous,
                            SplitMix64& rng);

    std::size_t arity() const { return arity_; }
    std::size_t out_dim() const { return components_.size(); }
    u32 total_degree() const { return total_degree_; }
    u64 modulus() const { return modulus_; }
    const std::vector<std::vector<Term>>& components() const { return components_; }

    Point eval(const Point& x) const;

    bool is_homogeneous() const;

    // Lift to arity+1 variables: each term of degree t gains the new first
    // variable with exponent total_degree - t. The result is homogeneous and
    // restricting the new variable to 1 recovers the original polynomial.
    MultiPoly homogenized() const;

private:
    MultiPoly(u64 modulus, std::size_t arity, std::vector<std::vector<Term>> components,
              u32 total_degree)
        : modulus_(modulus), arity_(arity), components_(std::move(components)),
          total_degree_(total_degree) {}

    u64 modulus_;
    std::size_t arity_;
    std::vector<std::vector<Term>> components_;
    u32 total_degree_;
};

/// Vector-valued univariate polynomial p : F -> F^m in coefficient form,
/// indexed by power of the parameter. Trailing zero coefficient vectors are
/// trimmed; the zero/constant curve has degree 0.
class Curve {
public:
    Curve(std::size_t dim, u64 modulus, std::vector<Point> coeffs);

    static Curve constant(Point value);

    std::size_t dim() const { return dim_; }
    u64 modulus() const { return modulus_; }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Point>& coefficients() const { return coeffs_; }

    Point eval(const FieldElem& z) const;  // Horner, per coordinate

    bool operator==(const Curve& o) const;

private:
    std::size_t dim_;
    u64 modulus_;
    std::vector<Point> coeffs_;
};

struct Sample {
    FieldElem z;
    Point y;
};

/// Lagrange interpolation through the first degree_bound+1 samples,
/// component-wise. Any further samples are checked against the fitted curve;
/// disagreement raises inconsistent_samples_error (a wrong degree bound or a
/// corrupted sample, never silently ignored).
Curve interpolate(const std::vector<Sample>& samples, std::size_t degree_bound);

/// Robust interpolation tolerating up to max_corruptions wrong samples.
/// Solves Q(z_i) = y_i * E(z_i) with deg Q <= degree_bound + b and E monic of
/// degree b, one linear system per output component, then divides. Requires
/// degree_bound + 2b + 1 samples; the fitted curve is verified to disagree
/// with at most b samples per component.
Curve berlekamp_welch(const std::vector<Sample>& samples, std::size_t degree_bound,
                      std::size_t max_corruptions);

}  // namespace ccomp
