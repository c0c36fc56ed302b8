#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "topoidx/checked.hpp"
#include "topoidx/errors.hpp"

namespace topoidx {

// Exact rational on checked 64-bit integers, canonical form (reduced,
// positive denominator). Just enough arithmetic for polynomial evaluation.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // implicit: integers are rationals
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw InvalidParameterError("rational with zero denominator");
        if (num_ == std::numeric_limits<std::int64_t>::min() ||
            den_ == std::numeric_limits<std::int64_t>::min())
            throw OverflowError("rational out of the 64-bit range");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace topoidx
