#include "lagrange3/numeric.hpp"

#include <cmath>
#include <map>
#include <vector>
#include <ostream>
#include <stdexcept>

namespace lagrange3 {

namespace {

constexpr unsigned long kTrialLimit = 1UL << 14;

// Splits n = s^2 * f with f free of square factors below kTrialLimit and not
// itself a perfect square.
void split_square(const Integer& n, Integer& s, Integer& f)
{
    s = 1;
    f = n;
    for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
        Integer pp = Integer(p) * p;
        if (pp > f) {
            break;
        }
        while (mpz_divisible_p(f.get_mpz_t(), pp.get_mpz_t()) != 0) {
            f /= pp;
            s *= p;
        }
    }
    if (f > 1 && is_perfect_square(f)) {
        Integer root = isqrt(f);
        s *= root;
        f = 1;
    }
}

// sign(a + b*sqrt(d)) for rationals a, b and d > 0 not a perfect square.
int sign_of(const Rational& a, const Rational& b, const Integer& d)
{
    int sa = sgn(a);
    int sb = sgn(b);
    if (sb == 0 || d == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    Rational lhs = a * a;
    Rational rhs = b * b * d;
    int c = cmp(lhs, rhs);
    if (c > 0) {
        return sa;
    }
    if (c < 0) {
        return sb;
    }
    return 0;
}

// sign(a + b*sqrt(d1) + c*sqrt(d2)) for two distinct fields.
int sign_of(const Rational& a, const Rational& b, const Integer& d1, const Rational& c, const Integer& d2)
{
    int s_left = sign_of(a, b, d1);
    int s_right = sgn(c);
    if (s_right == 0 || d2 == 0) {
        return s_left;
    }
    if (s_left == 0 || s_left == s_right) {
        return s_right;
    }
    // |a + b√d1| vs |c|√d2 through the squares: (a² + b²d1 - c²d2) + 2ab√d1.
    Rational rat = a * a + b * b * d1 - c * c * d2;
    Rational rad = 2 * a * b;
    int s = sign_of(rat, rad, d1);
    if (s > 0) {
        return s_left;
    }
    if (s < 0) {
        return s_right;
    }
    return 0;
}

// Brings two irrational operands into one field or throws.
void unify(Quad& lhs, Quad& rhs)
{
    if (lhs.is_rational() || rhs.is_rational() || lhs.d() == rhs.d()) {
        return;
    }
    if (lhs.rebase(rhs.d()) || rhs.rebase(lhs.d())) {
        return;
    }
    throw std::domain_error("Quad arithmetic across distinct quadratic fields: sqrt(" + lhs.d().get_str() +
                            ") and sqrt(" + rhs.d().get_str() + ")");
}

const Integer& common_radicand(const Quad& a, const Quad& b)
{
    return a.is_rational() ? b.d() : a.d();
}


// Sign of a sum of surds in any number of fields. Square roots of distinct
// square-free integers are linearly independent over Q, so the sum is zero
// iff every per-radicand coefficient vanishes; otherwise refine until the
// enclosure leaves 0.
int sign_of_terms(const std::vector<Quad>& terms)
{
    std::map<Integer, Rational> coef;
    Rational rational = 0;
    for (const Quad& t : terms) {
        rational += t.rational_part();
        if (!t.is_rational()) {
            coef[t.d()] += t.radical_coefficient();
        }
    }
    bool all_zero = true;
    for (const auto& [d, c] : coef) {
        all_zero = all_zero && c == 0;
    }
    if (all_zero) {
        return sgn(rational);
    }
    for (unsigned long bits = 32;; bits *= 2) {
        Integer scale = Integer(1) << bits;
        Rational lo = rational;
        Rational hi = rational;
        for (const auto& [d, c] : coef) {
            if (c == 0) {
                continue;
            }
            Integer root = isqrt(d * scale * scale);
            Rational below(root, scale);
            Rational above(root + 1, scale);
            below.canonicalize();
            above.canonicalize();
            if (c > 0) {
                lo += c * below;
                hi += c * above;
            } else {
                lo += c * above;
                hi += c * below;
            }
        }
        if (lo > 0) {
            return 1;
        }
        if (hi < 0) {
            return -1;
        }
    }
}

}  // namespace

Integer isqrt(const Integer& n)
{
    if (n < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer pow10(unsigned long exponent)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
    return out;
}

Quad::Quad(const Rational& value) : p_(value.get_num()), r_(value.get_den()) {}

Quad::Quad(Integer p, Integer q, Integer r, Integer d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d))
{
    if (r_ == 0) {
        throw std::domain_error("Quad with zero denominator");
    }
    if (d_ < 0) {
        throw std::domain_error("Quad with negative radicand");
    }
    normalize();
}

Quad Quad::sqrt(const Rational& x)
{
    if (x < 0) {
        throw std::domain_error("square root of a negative rational");
    }
    // sqrt(n/m) = sqrt(n*m)/m
    Integer n = x.get_num() * x.get_den();
    return Quad(0, 1, x.get_den(), n);
}

void Quad::normalize()
{
    if (r_ < 0) {
        r_ = -r_;
        p_ = -p_;
        q_ = -q_;
    }
    if (q_ != 0 && d_ > 1) {
        Integer s;
        Integer f;
        split_square(d_, s, f);
        q_ *= s;
        d_ = f;
    }
    if (q_ == 0 || d_ <= 1) {
        if (d_ == 1) {
            p_ += q_;
        }
        q_ = 0;
        d_ = 0;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

bool Quad::rebase(const Integer& d)
{
    if (is_rational() || d == d_) {
        return true;
    }
    if (d <= 1) {
        return false;
    }
    // sqrt(d_) = sqrt(d_*d)/d * sqrt(d)
    Integer prod = d_ * d;
    if (!is_perfect_square(prod)) {
        return false;
    }
    Integer root = isqrt(prod);
    p_ *= d;
    q_ *= root;
    r_ *= d;
    d_ = d;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
    return true;
}

Rational Quad::rational_part() const
{
    Rational out(p_, r_);
    out.canonicalize();
    return out;
}

Rational Quad::radical_coefficient() const
{
    Rational out(q_, r_);
    out.canonicalize();
    return out;
}

Rational Quad::to_rational() const
{
    if (!is_rational()) {
        throw std::domain_error("Quad is irrational: " + to_string());
    }
    return rational_part();
}

int Quad::sign() const
{
    return sign_of(rational_part(), radical_coefficient(), d_);
}

Quad Quad::operator-() const
{
    Quad out = *this;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
}

Quad Quad::reciprocal() const
{
    // r / (p + q√d) = r (p - q√d) / (p² - q² d)
    Integer norm = p_ * p_ - q_ * q_ * d_;
    if (norm == 0) {
        throw std::domain_error("reciprocal of zero");
    }
    return Quad(r_ * p_, -r_ * q_, norm, d_);
}

Quad& Quad::operator+=(const Quad& other)
{
    Quad rhs = other;
    unify(*this, rhs);
    Integer d = common_radicand(*this, rhs);
    *this = Quad(p_ * rhs.r_ + rhs.p_ * r_, q_ * rhs.r_ + rhs.q_ * r_, r_ * rhs.r_, d);
    return *this;
}

Quad& Quad::operator-=(const Quad& other)
{
    return *this += -other;
}

Quad& Quad::operator*=(const Quad& other)
{
    Quad rhs = other;
    unify(*this, rhs);
    Integer d = common_radicand(*this, rhs);
    Integer p = p_ * rhs.p_ + q_ * rhs.q_ * d;
    Integer q = p_ * rhs.q_ + q_ * rhs.p_;
    *this = Quad(p, q, r_ * rhs.r_, d);
    return *this;
}

Quad& Quad::operator/=(const Quad& other)
{
    return *this *= other.reciprocal();
}

Quad operator+(Quad lhs, const Quad& rhs) { return lhs += rhs; }
Quad operator-(Quad lhs, const Quad& rhs) { return lhs -= rhs; }
Quad operator*(Quad lhs, const Quad& rhs) { return lhs *= rhs; }
Quad operator/(Quad lhs, const Quad& rhs) { return lhs /= rhs; }

double Quad::to_double() const
{
    mpf_class p(p_, 256);
    mpf_class q(q_, 256);
    mpf_class r(r_, 256);
    mpf_class d(d_, 256);
    mpf_class v = (p + q * ::sqrt(d)) / r;
    return v.get_d();
}

std::string Quad::to_string() const
{
    if (is_rational()) {
        return rational_part().get_str();
    }
    return "(" + p_.get_str() + (q_ < 0 ? "-" : "+") + Integer(abs(q_)).get_str() + "*sqrt(" + d_.get_str() + "))/" +
           r_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Quad& value)
{
    return os << value.to_string();
}

int compare(const Quad& lhs, const Quad& rhs)
{
    Rational a = lhs.rational_part() - rhs.rational_part();
    if (lhs.is_rational() || rhs.is_rational() || lhs.d() == rhs.d()) {
        Rational b = lhs.radical_coefficient() - rhs.radical_coefficient();
        return sign_of(a, b, common_radicand(lhs, rhs));
    }
    Quad moved = rhs;
    if (moved.rebase(lhs.d())) {
        return sign_of(a, lhs.radical_coefficient() - moved.radical_coefficient(), lhs.d());
    }
    return sign_of(a, lhs.radical_coefficient(), lhs.d(), -rhs.radical_coefficient(), rhs.d());
}

Integer floor_scaled(const Quad& x, const Integer& num, const Integer& den)
{
    Integer a = x.p() * num;
    Integer b = x.q() * num;
    Integer t = a;
    if (b != 0) {
        Integer sq = b * b * x.d();
        Integer root = isqrt(sq);
        if (b > 0) {
            t += root;
        } else {
            t -= root;
            if (root * root != sq) {
                t -= 1;
            }
        }
    }
    Integer out;
    Integer div = x.r() * den;
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), div.get_mpz_t());
    return out;
}

int QuadSum::sign() const
{
    Rational a = first.rational_part() + second.rational_part();
    if (first.is_rational() || second.is_rational() || first.d() == second.d()) {
        Integer d = first.is_rational() ? second.d() : first.d();
        return sign_of(a, first.radical_coefficient() + second.radical_coefficient(), d);
    }
    Quad moved = second;
    if (moved.rebase(first.d())) {
        return sign_of(a, first.radical_coefficient() + moved.radical_coefficient(), first.d());
    }
    return sign_of(a, first.radical_coefficient(), first.d(), second.radical_coefficient(), second.d());
}

bool QuadSum::single_field() const
{
    if (first.is_rational() || second.is_rational() || first.d() == second.d()) {
        return true;
    }
    Quad moved = second;
    return moved.rebase(first.d());
}

Quad QuadSum::collapse() const
{
    return first + second;
}

int compare(const QuadSum& lhs, const Rational& rhs)
{
    return QuadSum{lhs.first - Quad(rhs), lhs.second}.sign();
}

int compare(const QuadSum& lhs, const QuadSum& rhs)
{
    return sign_of_terms({lhs.first, lhs.second, -rhs.first, -rhs.second});
}

Interval operator+(const Interval& lhs, const Rational& rhs)
{
    return {lhs.lo + Quad(rhs), lhs.hi + Quad(rhs)};
}

Interval operator+(const Interval& lhs, const Interval& rhs)
{
    return {lhs.lo + rhs.lo, lhs.hi + rhs.hi};
}

std::string render_decimal(const std::function<int(const Rational&)>& cmp_fn,
                           const std::function<Integer(const Integer&, const Integer&)>& floor_hint, int digits)
{
    if (digits < 1) {
        throw std::invalid_argument("render_decimal needs at least one digit");
    }
    int s = cmp_fn(Rational(0));
    if (s == 0) {
        return "0";
    }
    if (s < 0) {
        std::string body = render_decimal([&](const Rational& r) { return -cmp_fn(-r); },
                                          [&](const Integer& num, const Integer& den) {
                                              Integer h = floor_hint(num, den);
                                              return Integer(-h - 3);
                                          },
                                          digits);
        return "-" + body;
    }

    auto power = [](long e) {
        Rational out = e >= 0 ? Rational(pow10(static_cast<unsigned long>(e))) : Rational(1, pow10(static_cast<unsigned long>(-e)));
        out.canonicalize();
        return out;
    };
    // Start from a coarse integer estimate of the exponent and correct exactly.
    long e = 0;
    while (cmp_fn(power(e)) < 0) {
        e -= 8;
    }
    while (cmp_fn(power(e + 1)) >= 0) {
        ++e;
    }
    while (cmp_fn(power(e)) < 0) {
        --e;
    }

    // floor(factor * x) with factor = num/den, corrected from the hint.
    auto exact_floor = [&](const Integer& num, const Integer& den) {
        Integer h = floor_hint(num, den);
        for (;;) {
            Rational next(Integer(h + 1) * den, num);
            next.canonicalize();
            if (cmp_fn(next) < 0) {
                return h;
            }
            ++h;
        }
    };

    long shift = digits - 1 - e;
    Integer num = shift >= 0 ? pow10(static_cast<unsigned long>(shift)) : Integer(1);
    Integer den = shift >= 0 ? Integer(1) : pow10(static_cast<unsigned long>(-shift));
    Integer twice = exact_floor(Integer(2 * num), den);
    Integer mantissa = twice / 2;
    if (mpz_odd_p(twice.get_mpz_t()) != 0) {
        Rational half(Integer(twice) * den, Integer(2 * num));
        half.canonicalize();
        bool tie = cmp_fn(half) == 0;
        if (!tie || mpz_odd_p(mantissa.get_mpz_t()) != 0) {
            mantissa += 1;
        }
    }
    if (mantissa == pow10(static_cast<unsigned long>(digits))) {
        mantissa /= 10;
        ++e;
    }

    std::string m = mantissa.get_str();
    while (m.size() > 1 && m.back() == '0') {
        m.pop_back();
    }
    std::string out;
    if (e >= 0 && e < digits) {
        std::string whole = m.substr(0, std::min<size_t>(m.size(), static_cast<size_t>(e) + 1));
        while (whole.size() < static_cast<size_t>(e) + 1) {
            whole += '0';
        }
        out = whole;
        if (m.size() > static_cast<size_t>(e) + 1) {
            out += "." + m.substr(static_cast<size_t>(e) + 1);
        }
    } else if (e < 0 && e >= -6) {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + m;
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) {
            out += "." + m.substr(1);
        }
        out += "e" + std::to_string(e);
    }
    return out;
}

std::string to_decimal(const Quad& x, int digits)
{
    return render_decimal([&](const Rational& r) { return compare(x, Quad(r)); },
                          [&](const Integer& num, const Integer& den) { return floor_scaled(x, num, den); }, digits);
}

std::string to_decimal(const QuadSum& x, int digits)
{
    return render_decimal([&](const Rational& r) { return compare(x, r); },
                          [&](const Integer& num, const Integer& den) {
                              return Integer(floor_scaled(x.first, num, den) + floor_scaled(x.second, num, den));
                          },
                          digits);
}

std::string to_decimal(const Rational& x, int digits)
{
    return to_decimal(Quad(x), digits);
}

}  // namespace lagrange3
