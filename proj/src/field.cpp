#include "hly/field.hpp"

namespace hly {

namespace {

using i128 = __int128;

std::int64_t checked_i64(i128 v, const char* where) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw OverflowError(std::string("integer overflow in ") + where);
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// inverse of a mod p, a not divisible by p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw EngineError("non-invertible element in GF(p)");
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::gf(std::int64_t prime) {
    if (!is_prime(prime)) throw EngineError("GF(p) requires a prime modulus, got " + std::to_string(prime));
    Field f;
    f.p = prime;
    return f;
}

Scalar::Scalar(std::int64_t n, std::int64_t d, Field f) : num_(n), den_(d), field_(f) {
    if (d == 0) throw EngineError("scalar with zero denominator");
    canonicalize_();
}

void Scalar::canonicalize_() {
    if (field_.is_rational()) {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ = checked_i64(i128(num_) / g, "canonicalize");
            den_ = checked_i64(i128(den_) / g, "canonicalize");
        }
        if (num_ == 0) den_ = 1;
    } else {
        const std::int64_t p = field_.p;
        std::int64_t n = num_ % p;
        if (n < 0) n += p;
        std::int64_t d = den_ % p;
        if (d < 0) d += p;
        if (d == 0) throw EngineError("denominator divisible by the field characteristic");
        if (d != 1) n = checked_i64(i128(n) * mod_inverse(d, p) % p, "gf reduce");
        num_ = n;
        den_ = 1;
    }
}

void Scalar::check_same_field_(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        throw FieldMismatchError("mixed fields: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
        r.num_ = -num_;
    } else if (num_ != 0) {
        r.num_ = field_.p - num_;
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field_(*this, o);
    if (field_.is_rational()) {
        i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        i128 d = i128(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        return Scalar(checked_i64(n, "add"), checked_i64(d, "add"), field_);
    }
    return Scalar((num_ + o.num_) % field_.p, 1, field_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field_(*this, o);
    if (field_.is_rational()) {
        i128 n = i128(num_) * o.num_;
        i128 d = i128(den_) * o.den_;
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        return Scalar(checked_i64(n, "mul"), checked_i64(d, "mul"), field_);
    }
    return Scalar(checked_i64(i128(num_) * o.num_ % field_.p, "gf mul"), 1, field_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw EngineError("division by zero");
    if (field_.is_rational()) return Scalar(den_, num_, field_);
    return Scalar(mod_inverse(num_, field_.p), 1, field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field_(*this, o);
    return *this * o.inverse();
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hly
