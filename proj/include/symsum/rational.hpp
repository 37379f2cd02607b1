#pragma once

#include "symsum/checked.hpp"

#include <numeric>
#include <string>

namespace symsum {

// Exact rational on checked 64-bit integers.  Denominator is kept positive
// and the fraction reduced.  This is all the rational arithmetic the engine
// needs (adjunction genera have denominator 1 or 2; signature pivots stay
// tiny), so a dedicated bignum dependency would be dead weight.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(i64 n) : num_(n), den_(1) {}
    Rat(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rat operator+(const Rat& o) const {
        return Rat(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                   checked_mul(den_, o.den_));
    }
    Rat operator-(const Rat& o) const {
        return Rat(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                   checked_mul(den_, o.den_));
    }
    Rat operator*(const Rat& o) const {
        return Rat(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rat operator-() const { return Rat(checked_neg(num_), den_); }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = checked_neg(num_); den_ = checked_neg(den_); }
        i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    i64 num_;
    i64 den_; // > 0
};

} // namespace symsum
