#pragma once

// Exact scalars: rationals in lowest terms (positive denominator) or elements
// of a prime field GF(p).  The field is fixed per engine instance; mixing
// values from different fields is a hard error, never a silent coercion.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hly {

struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatchError : EngineError {
    explicit FieldMismatchError(const std::string& what) : EngineError(what) {}
};

struct OverflowError : EngineError {
    explicit OverflowError(const std::string& what) : EngineError(what) {}
};

struct DimensionError : EngineError {
    explicit DimensionError(const std::string& what) : EngineError(what) {}
};

// p == 0 means the rationals; p > 0 must be prime (checked on construction).
struct Field {
    std::int64_t p = 0;

    Field() = default;
    static Field rationals() { return Field{}; }
    static Field gf(std::int64_t prime);

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }
    std::string str() const { return p == 0 ? "rational" : "gf:" + std::to_string(p); }
};

class Scalar {
public:
    Scalar() = default;   // rational 0
    Scalar(std::int64_t n, std::int64_t d, Field f);

    static Scalar zero(Field f) { return Scalar(0, 1, f); }
    static Scalar one(Field f) { return Scalar(1, 1, f); }
    static Scalar of_int(std::int64_t n, Field f) { return Scalar(n, 1, f); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    Field field() const { return field_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    // Equality is structural; canonical form makes it semantic.
    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_ && field_ == o.field_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;   // o must be nonzero
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    Field field_;

    void canonicalize_();
    static void check_same_field_(const Scalar& a, const Scalar& b);
};

}  // namespace hly
