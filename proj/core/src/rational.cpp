#include "spectough/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace spectough {

struct RationalRaw {
    static Rational make(std::int64_t num, std::int64_t den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }
};

namespace {

using i128 = __int128;

std::int64_t check_fits(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduce(i128 num, i128 den, const char* what) {
    if (den == 0) throw std::invalid_argument("rational denominator is zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational(0);
    i128 g = gcd128(num, den);
    return RationalRaw::make(check_fits(num / g, what), check_fits(den / g, what));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    Rational r = reduce(num, den, "construction");
    num_ = r.num_;
    den_ = r.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return Rational(n);
        }
        std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        std::string den_text = text.substr(slash + 1);
        std::int64_t d = std::stoll(den_text, &used);
        if (used != den_text.size()) throw std::invalid_argument("");
        return Rational(n, d);
    } catch (const std::overflow_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return reduce(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_, "+");
}

Rational operator-(const Rational& a, const Rational& b) {
    return reduce(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_, "-");
}

Rational operator*(const Rational& a, const Rational& b) {
    return reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "*");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return reduce(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "/");
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

}  // namespace spectough
