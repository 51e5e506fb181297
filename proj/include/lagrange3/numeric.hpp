#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <iosfwd>
#include <string>

namespace lagrange3 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact real number (p + q·√d) / r.
///
/// Normal form: r > 0, gcd(p, q, r) = 1, d square-free (see normalize) and
/// q = d = 0 whenever the value is rational. Values with different radicands
/// can be compared with each other, but arithmetic between two irrational
/// operands requires a common quadratic field.
class Quad {
public:
    Quad() = default;
    Quad(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
    Quad(const Integer& value) : p_(value) {}  // NOLINT(google-explicit-constructor)
    Quad(const Rational& value);  // NOLINT(google-explicit-constructor)
    Quad(Integer p, Integer q, Integer r, Integer d);

    /// √x for a non-negative rational x.
    static Quad sqrt(const Rational& x);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& r() const { return r_; }
    const Integer& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rational rational_part() const;
    Rational radical_coefficient() const;
    /// Exact value when rational; throws std::domain_error otherwise.
    Rational to_rational() const;

    int sign() const;
    Quad operator-() const;
    Quad reciprocal() const;
    Quad& operator+=(const Quad& other);
    Quad& operator-=(const Quad& other);
    Quad& operator*=(const Quad& other);
    Quad& operator/=(const Quad& other);

    /// Rewrites the value over radicand `d`, if √d_ / √d is rational.
    bool rebase(const Integer& d);

    double to_double() const;
    /// "(p+q*sqrt(d))/r", or a plain rational when q = 0.
    std::string to_string() const;

private:
    void normalize();

    Integer p_ = 0;
    Integer q_ = 0;
    Integer r_ = 1;
    Integer d_ = 0;
};

Quad operator+(Quad lhs, const Quad& rhs);
Quad operator-(Quad lhs, const Quad& rhs);
Quad operator*(Quad lhs, const Quad& rhs);
Quad operator/(Quad lhs, const Quad& rhs);

/// Exact three-way comparison; radicands may differ.
int compare(const Quad& lhs, const Quad& rhs);
inline bool operator==(const Quad& lhs, const Quad& rhs) { return compare(lhs, rhs) == 0; }
inline std::strong_ordering operator<=>(const Quad& lhs, const Quad& rhs)
{
    return compare(lhs, rhs) <=> 0;
}
std::ostream& operator<<(std::ostream& os, const Quad& value);

/// floor(x · num / den) computed exactly; den > 0, num >= 0.
Integer floor_scaled(const Quad& x, const Integer& num, const Integer& den);

/// Sum of two quadratic surds whose radicands may differ. Only comparison
/// and rendering are supported; it is the value type of extremal cut values
/// where the left and right tails live in different fields.
struct QuadSum {
    Quad first;
    Quad second;

    int sign() const;
    double to_double() const { return first.to_double() + second.to_double(); }
    /// Collapses to a single Quad when both terms share a field.
    bool single_field() const;
    Quad collapse() const;
};
int compare(const QuadSum& lhs, const Rational& rhs);
int compare(const QuadSum& lhs, const QuadSum& rhs);

/// Closed interval with exact endpoints, lo <= hi.
struct Interval {
    Quad lo;
    Quad hi;

    static Interval point(const Quad& value) { return {value, value}; }

    bool is_point() const { return lo == hi; }
    bool contains(const Quad& value) const { return compare(lo, value) <= 0 && compare(value, hi) <= 0; }
    /// Width as a double; only for diagnostics.
    double width_estimate() const { return hi.to_double() - lo.to_double(); }
};
Interval operator+(const Interval& lhs, const Rational& rhs);
Interval operator+(const Interval& lhs, const Interval& rhs);

/// Renders a value to `digits` significant decimal digits, round-half-even,
/// exactly (no floating point). `cmp(r)` must return sign(x - r); `floor_hint`
/// must return an integer within 2 below floor(x · num / den).
std::string render_decimal(const std::function<int(const Rational&)>& cmp,
                           const std::function<Integer(const Integer&, const Integer&)>& floor_hint,
                           int digits = 30);

std::string to_decimal(const Quad& x, int digits = 30);
std::string to_decimal(const QuadSum& x, int digits = 30);
std::string to_decimal(const Rational& x, int digits = 30);

/// Largest s with s*s <= n (n >= 0).
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
Integer pow10(unsigned long exponent);

}  // namespace lagrange3
