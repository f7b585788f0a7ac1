#include "lozi/quadext.hpp"

#include "lozi/error.hpp"

#include <cmath>
#include <ostream>

namespace lozi {

QuadField::QuadField(const Rational& D) : d_(D) {
    if (D.sign() < 0) throw DomainError("field discriminant must be nonnegative, got " + D.str());
    mpz_class num = D.numerator();
    mpz_class den = D.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        is_square_ = true;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        exact_sqrt_ = Rational(mpq_class(mpq_class(rn) / mpq_class(rd)));
    }
    sqrt_double_ = std::sqrt(D.to_double());
}

std::shared_ptr<const QuadField> QuadField::make(const Rational& D) {
    auto field = std::shared_ptr<QuadField>(new QuadField(D));
    field->self_ = field;
    return field;
}

QuadExt QuadField::value(const Rational& r) const {
    return QuadExt(r, Rational(0), self_.lock());
}

QuadExt QuadField::value(const Rational& r, const Rational& s) const {
    return QuadExt(r, s, self_.lock());
}

QuadExt::QuadExt(const Rational& r, const Rational& s, std::shared_ptr<const QuadField> field)
    : r_(r), s_(s), field_(std::move(field)) {
    if (!s_.is_zero() && !field_) {
        throw DomainError("sqrt coefficient requires a field context");
    }
    normalize();
}

void QuadExt::normalize() {
    if (field_ && field_->is_square() && !s_.is_zero()) {
        r_ += s_ * field_->exact_sqrt();
        s_ = Rational(0);
    }
}

std::shared_ptr<const QuadField> QuadExt::merge_fields(const QuadExt& a, const QuadExt& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        a.field_->discriminant() != b.field_->discriminant()) {
        throw MixedFieldError("operands belong to different quadratic fields: sqrt(" +
                              a.field_->discriminant().str() + ") vs sqrt(" +
                              b.field_->discriminant().str() + ")");
    }
    return a.field_ ? a.field_ : b.field_;
}

const Rational& QuadExt::as_rational() const {
    if (!is_rational()) throw DomainError("value " + str() + " is not rational");
    return r_;
}

int QuadExt::sign() const {
    if (s_.is_zero()) return r_.sign();
    if (r_.is_zero()) return s_.sign();
    const int rs = r_.sign();
    const int ss = s_.sign();
    if (rs == ss) return rs;
    // Opposite signs: compare r^2 against s^2 * D. They cannot be equal,
    // since equality would make sqrt(D) rational and normalize() already
    // folded that case.
    const Rational lhs = r_ * r_;
    const Rational rhs = s_ * s_ * field_->discriminant();
    return lhs > rhs ? rs : ss;
}

std::string QuadExt::str() const {
    if (s_.is_zero()) return r_.str();
    std::string tail = s_.str() + "*sqrt(D)";
    if (r_.is_zero()) return tail;
    return r_.str() + (s_.sign() > 0 ? "+" : "") + tail;
}

double QuadExt::to_double() const {
    double v = r_.to_double();
    if (!s_.is_zero()) v += s_.to_double() * field_->sqrt_double();
    return v;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.r_ + b.r_, a.s_ + b.s_, QuadExt::merge_fields(a, b));
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.r_ - b.r_, a.s_ - b.s_, QuadExt::merge_fields(a, b));
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    auto field = QuadExt::merge_fields(a, b);
    Rational cross = a.r_ * b.s_ + a.s_ * b.r_;
    Rational plain = a.r_ * b.r_;
    if (!a.s_.is_zero() && !b.s_.is_zero()) {
        plain += a.s_ * b.s_ * field->discriminant();
    }
    return QuadExt(plain, cross, std::move(field));
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero in quadratic field");
    auto field = QuadExt::merge_fields(a, b);
    if (b.s_.is_zero()) {
        return QuadExt(a.r_ / b.r_, a.s_ / b.r_, std::move(field));
    }
    // Multiply by the conjugate. The norm r^2 - s^2 D of a nonzero value is
    // nonzero because sqrt(D) is irrational here.
    Rational norm = b.r_ * b.r_ - b.s_ * b.s_ * field->discriminant();
    QuadExt conj(b.r_, -b.s_, field);
    QuadExt num = a * conj;
    return QuadExt(num.r_ / norm, num.s_ / norm, std::move(field));
}

QuadExt QuadExt::operator-() const {
    return QuadExt(-r_, -s_, field_);
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    QuadExt::merge_fields(a, b);
    return a.r_ == b.r_ && a.s_ == b.s_;
}

QuadExt QuadExt::parse(std::string_view text, std::shared_ptr<const QuadField> field) {
    if (text.empty()) throw ParseError("empty field element literal");
    const std::string_view marker = "*sqrt(D)";
    const auto pos = text.rfind(marker);
    if (pos == std::string_view::npos) {
        return QuadExt(Rational::parse(text), Rational(0), std::move(field));
    }
    if (pos + marker.size() != text.size()) {
        throw ParseError("malformed field element: \"" + std::string(text) + "\"");
    }
    std::string_view head = text.substr(0, pos);
    // Split an optional rational part. Any sign past position 0 must begin
    // the sqrt coefficient, because rational literals contain no inner signs.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < head.size(); ++i) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    if (!field) throw DomainError("sqrt literal requires a field context");
    if (split == std::string_view::npos) {
        return QuadExt(Rational(0), Rational::parse(head), std::move(field));
    }
    Rational r = Rational::parse(head.substr(0, split));
    std::string_view stail = head.substr(split);
    if (stail.size() >= 2 && stail[0] == '+') stail.remove_prefix(1);
    return QuadExt(r, Rational::parse(stail), std::move(field));
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
    return os << q.str();
}

} // namespace lozi
