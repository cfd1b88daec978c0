#include "taxigeom/ext_ratio.hpp"

#include <ostream>
#include <stdexcept>

namespace taxi {

ExtRatio::ExtRatio(Scalar s) {
    if (s.sign() < 0) {
        throw std::domain_error("ExtRatio: negative value " + s.str());
    }
    v_ = std::move(s);
}

ExtRatio ExtRatio::parse(std::string_view text) {
    if (text == "inf") {
        return infinity();
    }
    return ExtRatio(Scalar::parse(text));
}

const Scalar& ExtRatio::finite() const {
    if (!v_) {
        throw std::domain_error("ExtRatio: infinite value has no finite part");
    }
    return *v_;
}

ExtRatio ExtRatio::reciprocal() const {
    if (is_infinite()) {
        return ExtRatio(Scalar(0));
    }
    if (v_->is_zero()) {
        return infinity();
    }
    return ExtRatio(v_->reciprocal());
}

bool ExtRatio::operator==(const ExtRatio& rhs) const {
    if (is_infinite() || rhs.is_infinite()) {
        return is_infinite() == rhs.is_infinite();
    }
    return *v_ == *rhs.v_;
}

bool ExtRatio::operator<(const ExtRatio& rhs) const {
    if (is_infinite()) return false;
    if (rhs.is_infinite()) return true;
    return *v_ < *rhs.v_;
}

std::string ExtRatio::str() const { return v_ ? v_->str() : "inf"; }

std::ostream& operator<<(std::ostream& os, const ExtRatio& k) { return os << k.str(); }

}  // namespace taxi
