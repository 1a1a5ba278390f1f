// Reduced fractions over int64.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace maxcurve {

class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(implicit)
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    constexpr std::int64_t floor() const noexcept {
        std::int64_t f = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --f;
        return f;
    }
    constexpr std::int64_t ceil() const noexcept {
        std::int64_t c = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++c;
        return c;
    }

    friend constexpr Rational operator+(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(const Rational &a, const Rational &b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend constexpr Rational operator/(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend constexpr bool operator==(const Rational &a, const Rational &b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace maxcurve
