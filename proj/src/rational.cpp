#include "omr/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace omr {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
}

namespace {

bool valid_int_token(const std::string& s, size_t from, size_t to, bool allow_sign) {
    if (from >= to) return false;
    size_t i = from;
    if (allow_sign && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= to) return false;
    for (; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s, 0, s.size(), true))
            throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    } else {
        if (!valid_int_token(s, 0, slash, true) ||
            !valid_int_token(s, slash + 1, s.size(), false))
            throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    }
    mpq_class v(s);
    if (sgn(v.get_den()) == 0)
        throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

std::string Rat::str() const {
    return v_.get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) { v_ += o.v_; return *this; }
Rat& Rat::operator-=(const Rat& o) { v_ -= o.v_; return *this; }
Rat& Rat::operator*=(const Rat& o) { v_ *= o.v_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace omr
