#ifndef QZETA_RATIONAL_HPP
#define QZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "qzeta/errors.hpp"

namespace qzeta {

/// Arbitrary-precision rational number, backed by GMP's mpq.
///
/// Always kept canonical: gcd(|num|, den) = 1, den >= 1, and zero is 0/1.
/// GMP maintains this through arithmetic; the constructors below take care
/// of it for raw num/den pairs (mpq_class alone does not).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}      // NOLINT: implicit by design
    Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
        if (sgn(v_.get_den()) == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "7", "-3/4" or a plain decimal like "0.25" (exactly).
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    /// Integer power; e < 0 requires a nonzero base.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = 1;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        return Rational(std::move(num), std::move(den));
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad decimal literal: " + s);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad decimal literal: " + s);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
        return Rational(std::move(num), std::move(den));
    }
    mpz_class num;
    if (num.set_str(s, 10) != 0)
        throw std::invalid_argument("bad integer literal: " + s);
    return Rational(num);
}

} // namespace qzeta

#endif
