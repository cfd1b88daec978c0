#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace taxi {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class that canonicalizes eagerly, so
/// equality is plain representation equality and every comparison is exact.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den);

    /// Parses "n" or "n/d" with an optional leading sign; the denominator
    /// must be unsigned and nonzero. Throws std::invalid_argument otherwise.
    static Scalar parse(std::string_view text);

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // throws std::domain_error on /0

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    bool operator==(const Scalar& rhs) const { return v_ == rhs.v_; }
    std::strong_ordering operator<=>(const Scalar& rhs) const;

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Scalar reciprocal() const;  // throws std::domain_error on zero

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    bool numerator_fits_long() const { return v_.get_num().fits_slong_p(); }
    bool denominator_fits_long() const { return v_.get_den().fits_slong_p(); }
    long numerator_long() const { return v_.get_num().get_si(); }
    long denominator_long() const { return v_.get_den().get_si(); }

    /// Nearest double; only the renderer should need this.
    double to_double() const { return v_.get_d(); }

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

Scalar abs(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace taxi
