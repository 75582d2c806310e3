#include "omr/primefield.hpp"

#include <stdexcept>

namespace omr {

bool Fp::valid_modulus(uint32_t p) {
    if (p < 2 || p > max_modulus) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Fp::Fp(long v, uint32_t p) {
    if (!valid_modulus(p))
        throw std::invalid_argument("Fp: modulus must be a prime <= 31, got " + std::to_string(p));
    p_ = p;
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    val_ = static_cast<uint32_t>(r);
}

void Fp::require_same(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
}

Fp Fp::operator-() const {
    return Fp(val_ == 0 ? 0 : static_cast<long>(p_ - val_), p_);
}

Fp operator+(const Fp& a, const Fp& b) {
    Fp::require_same(a, b);
    return Fp(static_cast<long>(a.val_ + b.val_), a.p_);
}

Fp operator-(const Fp& a, const Fp& b) {
    Fp::require_same(a, b);
    return Fp(static_cast<long>(a.val_ + a.p_ - b.val_), a.p_);
}

Fp operator*(const Fp& a, const Fp& b) {
    Fp::require_same(a, b);
    return Fp(static_cast<long>(a.val_ * b.val_), a.p_);
}

Fp operator/(const Fp& a, const Fp& b) {
    Fp::require_same(a, b);
    return a * b.inv();
}

Fp Fp::inv() const {
    if (val_ == 0) throw std::domain_error("Fp: inverse of zero");
    // p - 2 exponentiation; p <= 31 so a plain loop is fine
    uint32_t acc = 1;
    for (uint32_t e = 0; e < p_ - 2; ++e) acc = (acc * val_) % p_;
    return Fp(static_cast<long>(acc), p_);
}

bool operator==(const Fp& a, const Fp& b) {
    Fp::require_same(a, b);
    return a.val_ == b.val_;
}

}  // namespace omr
