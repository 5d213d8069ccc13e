#pragma once

#include <cstdint>
#include <vector>

#include "ccomp/errors.hpp"

namespace ccomp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

/// Element of GF(p). Carries its modulus, so values from different fields
/// cannot be mixed silently; all representatives are canonical (< p).
class FieldElem {
public:
    FieldElem() : v_(0), p_(0) {}
    FieldElem(u64 value, u64 modulus) : v_(value % modulus), p_(modulus) {}

    u64 value() const { return v_; }
    u64 modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const;       // throws usage_error on zero
    FieldElem pow(u64 e) const;  // 0^0 = 1

    bool operator==(const FieldElem& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    void check_same_field(const FieldElem& o) const;

    u64 v_;
    u64 p_;
};

using Point = std::vector<FieldElem>;

/// Prime field GF(p). Validates primality at construction; p must fit in
/// 61 bits so products fit in 128-bit intermediates.
class PrimeField {
public:
    explicit PrimeField(u64 modulus);

    u64 modulus() const { return p_; }

    FieldElem elem(u64 v) const { return FieldElem(v, p_); }
    FieldElem operator()(u64 v) const { return elem(v); }
    FieldElem from_int(i64 v) const;
    FieldElem zero() const { return elem(0); }
    FieldElem one() const { return elem(1); }

    // The first n field elements 0, 1, ..., n-1, the canonical anchor choice.
    std::vector<FieldElem> enumerate(u64 n) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    u64 p_;
};

bool points_equal(const Point& a, const Point& b);
bool point_is_zero(const Point& p);

}  // namespace ccomp
