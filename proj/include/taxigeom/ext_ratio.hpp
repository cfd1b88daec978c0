#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "taxigeom/scalar.hpp"

namespace taxi {

/// Element of [0, infinity]: a nonnegative Scalar or the point at infinity.
/// Infinity compares greater than every finite value.
class ExtRatio {
public:
    ExtRatio() : v_(Scalar(0)) {}
    ExtRatio(Scalar s);  // throws std::domain_error if s < 0
    ExtRatio(long n) : ExtRatio(Scalar(n)) {}

    static ExtRatio infinity() { return ExtRatio(infinity_tag{}); }

    /// Parses the Scalar syntax or "inf".
    static ExtRatio parse(std::string_view text);

    bool is_infinite() const { return !v_.has_value(); }
    bool is_zero() const { return v_.has_value() && v_->is_zero(); }

    /// Finite value; throws std::domain_error when infinite.
    const Scalar& finite() const;

    /// 1/0 = infinity and 1/infinity = 0.
    ExtRatio reciprocal() const;

    bool operator==(const ExtRatio& rhs) const;
    bool operator<(const ExtRatio& rhs) const;
    bool operator<=(const ExtRatio& rhs) const { return *this < rhs || *this == rhs; }
    bool operator>(const ExtRatio& rhs) const { return rhs < *this; }
    bool operator>=(const ExtRatio& rhs) const { return rhs <= *this; }

    std::string str() const;

private:
    struct infinity_tag {};
    explicit ExtRatio(infinity_tag) : v_(std::nullopt) {}
    std::optional<Scalar> v_;
};

std::ostream& operator<<(std::ostream& os, const ExtRatio& k);

}  // namespace taxi
