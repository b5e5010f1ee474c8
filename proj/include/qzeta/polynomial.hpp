#ifndef QZETA_POLYNOMIAL_HPP
#define QZETA_POLYNOMIAL_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Dense univariate polynomial in q with Rational coefficients.
///
/// Storage is coefficient-by-exponent with no trailing zeros; the zero
/// polynomial stores nothing and has degree() == -1.  All operations are
/// exact.  Dense storage is deliberate: the polynomials arising here
/// (q-binomials, harmonic-sum numerators) are dense.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT: implicit
    Polynomial(long c) : Polynomial(Rational(c)) {}                       // NOLINT: implicit
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Rational& c, int exp);
    static const Polynomial& zero();
    static const Polynomial& one();
    /// q^n - shorthand for monomial(1, n).
    static Polynomial q_power(int n) { return monomial(1, n); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of q^i (zero outside the stored range).
    const Rational& coeff(int i) const;
    const Rational& leading() const;  // pre: nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    Polynomial pow(unsigned e) const;

    /// Euclidean division over the rationals: a = quot*b + rem, deg rem < deg b.
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

    /// Quotient when b divides a exactly; throws NonExactDivision otherwise.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

    /// Greatest common divisor, normalized to integer coefficients with
    /// content 1 and positive leading coefficient.  gcd(p, 0) is normalized p;
    /// gcd(0, 0) is rejected.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Writes *this as scale * P with P integer-coefficient, content 1 and
    /// positive leading coefficient.  Pre: nonzero.
    std::pair<Rational, Polynomial> primitive_decompose() const;

    /// Horner evaluation at an exact rational point.
    Rational eval(const Rational& q0) const;

    bool operator==(const Polynomial&) const = default;

    std::string to_string(const char* var = "q") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

} // namespace qzeta

#endif
