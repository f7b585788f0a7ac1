#pragma once

#include "lozi/rational.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace lozi {

class QuadExt;

/// Shared context for values of the form r + s*sqrt(D) with fixed rational
/// D > 0. The context caches whether D is a perfect square (in which case
/// every value collapses to a plain rational), the exact square root when it
/// exists, and a double approximation of sqrt(D) for rendering.
class QuadField {
public:
    static std::shared_ptr<const QuadField> make(const Rational& D);

    const Rational& discriminant() const { return d_; }
    bool is_square() const { return is_square_; }
    /// Exact sqrt(D); only meaningful when is_square().
    const Rational& exact_sqrt() const { return exact_sqrt_; }
    double sqrt_double() const { return sqrt_double_; }

    QuadExt value(const Rational& r) const;
    QuadExt value(const Rational& r, const Rational& s) const;

private:
    explicit QuadField(const Rational& D);

    Rational d_;
    bool is_square_ = false;
    Rational exact_sqrt_;
    double sqrt_double_ = 0.0;

    friend class QuadExt;
    std::weak_ptr<const QuadField> self_;
};

/// Element r + s*sqrt(D) of a real quadratic extension of the rationals.
///
/// Values carry a pointer to their QuadField context. Mixing operands whose
/// contexts have different discriminants throws MixedFieldError. A value
/// without context (default construction, plain rationals) is compatible
/// with every field and adopts the other operand's context.
///
/// Invariant: when the context discriminant is a perfect square, or when the
/// value has no context, the sqrt coefficient is zero (folded into r).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : r_(n) {}
    QuadExt(const Rational& r) : r_(r) {}
    QuadExt(const Rational& r, const Rational& s, std::shared_ptr<const QuadField> field);

    /// Accepts "<rat>", "<rat>*sqrt(D)" and "<rat>+-<rat>*sqrt(D)", where
    /// <rat> is anything Rational::parse accepts. The literal letter D
    /// refers to the field's discriminant.
    static QuadExt parse(std::string_view text, std::shared_ptr<const QuadField> field);

    const Rational& rat_part() const { return r_; }
    const Rational& sqrt_part() const { return s_; }
    const std::shared_ptr<const QuadField>& field() const { return field_; }

    /// True when the value lies in the rationals (sqrt coefficient zero).
    bool is_rational() const { return s_.is_zero(); }
    /// Requires is_rational(); throws DomainError otherwise.
    const Rational& as_rational() const;

    int sign() const;
    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const;
    double to_double() const;

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
    QuadExt operator-() const;

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadExt& a, const QuadExt& b);
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

private:
    void normalize();
    static std::shared_ptr<const QuadField> merge_fields(const QuadExt& a, const QuadExt& b);

    Rational r_;
    Rational s_;
    std::shared_ptr<const QuadField> field_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

} // namespace lozi
