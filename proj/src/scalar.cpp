#include "taxigeom/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace taxi {

Scalar::Scalar(long num, long den) {
    if (den == 0) {
        throw std::domain_error("Scalar: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("Scalar: cannot parse '" + std::string(text) + "'");
    };

    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
    }
    if (i == num_begin) {
        fail();
    }

    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') {
            fail();
        }
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (i == den_begin || i != text.size()) {
            fail();
        }
        den = std::string(text.substr(den_begin));
    }

    mpz_class d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("Scalar: zero denominator in '" + std::string(text) + "'");
    }
    std::string num(text.substr(0, text.find('/')));
    if (num[0] == '+') {  // mpz rejects an explicit plus
        num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& rhs) const { return Scalar(mpq_class(v_ + rhs.v_)); }
Scalar Scalar::operator-(const Scalar& rhs) const { return Scalar(mpq_class(v_ - rhs.v_)); }
Scalar Scalar::operator*(const Scalar& rhs) const { return Scalar(mpq_class(v_ * rhs.v_)); }

Scalar Scalar::operator/(const Scalar& rhs) const {
    if (rhs.is_zero()) {
        throw std::domain_error("Scalar: division by zero");
    }
    return Scalar(mpq_class(v_ / rhs.v_));
}

std::strong_ordering Scalar::operator<=>(const Scalar& rhs) const {
    int c = cmp(v_, rhs.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Scalar: reciprocal of zero");
    }
    mpq_class r(v_.get_den(), v_.get_num());
    r.canonicalize();
    return Scalar(std::move(r));
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
Scalar max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace taxi
