#pragma once

#include <cstdint>
#include <string>

namespace omr {

/// Element of F_p for a prime p <= 31. Small on purpose: prime fields exist
/// here only to make point enumeration over Hom(A,B) finite.
class Fp {
public:
    static constexpr uint32_t max_modulus = 31;

    static bool valid_modulus(uint32_t p);

    Fp() : val_(0), p_(2) {}
    Fp(long v, uint32_t p);

    uint32_t value() const { return val_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return val_ == 0; }

    Fp operator-() const;
    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Fp inv() const;

    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(val_); }

private:
    static void require_same(const Fp& a, const Fp& b);
    uint32_t val_;
    uint32_t p_;
};

}  // namespace omr
