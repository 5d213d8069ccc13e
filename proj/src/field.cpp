#include "ccomp/field.hpp"

namespace ccomp {

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These witnesses decide primality for all n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (p_ != o.p_) throw usage_error("field elements from different moduli");
    if (p_ == 0) throw usage_error("operation on default-constructed field element");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    u64 s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return FieldElem(s, p_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(mulmod(v_, o.v_, p_), p_);
}

FieldElem FieldElem::operator-() const {
    return FieldElem(v_ == 0 ? 0 : p_ - v_, p_);
}

FieldElem FieldElem::inv() const {
    if (v_ == 0) throw usage_error("division by zero");
    // Extended Euclid; p prime guarantees the gcd is 1.
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(p_), new_r = static_cast<i64>(v_);
    while (new_r != 0) {
        i64 q = r / new_r;
        i64 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<i64>(p_);
    return FieldElem(static_cast<u64>(t), p_);
}

FieldElem FieldElem::pow(u64 e) const {
    if (p_ == 0) throw usage_error("operation on default-constructed field element");
    return FieldElem(powmod(v_, e, p_), p_);
}

PrimeField::PrimeField(u64 modulus) : p_(modulus) {
    if (modulus >= (1ULL << 61))
        throw usage_error("modulus must fit in 61 bits, got " + std::to_string(modulus));
    if (!is_prime_u64(modulus))
        throw usage_error("modulus " + std::to_string(modulus) + " is not prime");
}

FieldElem PrimeField::from_int(i64 v) const {
    i64 m = v % static_cast<i64>(p_);
    if (m < 0) m += static_cast<i64>(p_);
    return FieldElem(static_cast<u64>(m), p_);
}

std::vector<FieldElem> PrimeField::enumerate(u64 n) const {
    if (n > p_) throw field_too_small_error(n, p_);
    std::vector<FieldElem> out;
    out.reserve(n);
    for (u64 i = 0; i < n; ++i) out.push_back(elem(i));
    return out;
}

bool points_equal(const Point& a, const Point& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool point_is_zero(const Point& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace ccomp
