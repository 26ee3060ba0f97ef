#pragma once

#include <cstdint>
#include <string>

namespace spectough {

/// Exact rational number on 64-bit integers, always stored reduced with a
/// positive denominator. Arithmetic goes through 128-bit intermediates and
/// throws std::overflow_error if a reduced result does not fit; that keeps
/// every comparison exact, which the cut-ratio and coefficient checks rely on.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Renders "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Accepts "p" or "p/q" with optional sign on p.
    static Rational parse(const std::string& text);

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b);
    friend bool operator>=(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    friend struct RationalRaw;  // internal factory for already-reduced values
};

}  // namespace spectough
