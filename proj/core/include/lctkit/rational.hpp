#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lctkit {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction of arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Every operation is exact -- this is the only scalar type in the library,
/// nothing here ever touches floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator-(const Rational& x) {
        Rational r;
        r.num_ = -x.num_;
        r.den_ = x.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross multiplication preserves order
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Largest integer <= value.
    Int floor() const {
        if (den_ == 1) return num_;
        Int q = num_ / den_;  // truncates toward zero
        if (num_ < 0) q -= 1;
        return q;
    }

    /// Smallest integer >= value.
    Int ceil() const {
        if (den_ == 1) return num_;
        Int q = num_ / den_;
        if (num_ > 0) q += 1;
        return q;
    }

    /// Lowest-terms "p/q" string; integers print without the "/q" part.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parse "p/q" or "p".  Whitespace is not accepted; the result is normalized.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::domain_error("Rational: cannot parse '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        auto slash = text.find('/');
        std::string_view ns = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (ns.empty() || ds.empty()) bad();
        auto check_int = [&](std::string_view s) {
            size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) bad();
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') bad();
        };
        check_int(ns);
        check_int(ds);
        Int n{std::string(ns)};
        Int d{std::string(ds)};
        if (d == 0) bad();
        return Rational(std::move(n), std::move(d));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace lctkit
