#include "lozi/rational.hpp"

#include "lozi/error.hpp"

#include <cctype>
#include <ostream>

namespace lozi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Optionally signed run of digits. Returns false on any other shape.
bool parse_integer(std::string_view s, mpz_class& out) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return false;
    out = mpz_class(std::string(s), 10);
    if (neg) out = -out;
    return true;
}

} // namespace

Rational::Rational(const mpq_class& v) : v_(v) {
    // mpq_class arithmetic preserves canonical form, but values built from
    // raw numerator/denominator pairs do not start out canonical.
    v_.canonicalize();
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");

    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string_view::npos && dot != std::string_view::npos) {
        throw ParseError("rational literal mixes '/' and '.': \"" + std::string(text) + "\"");
    }

    mpz_class num, den(1);
    if (slash != std::string_view::npos) {
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den)) {
            throw ParseError("malformed fraction: \"" + std::string(text) + "\"");
        }
        if (den == 0) throw DivisionByZeroError("zero denominator in \"" + std::string(text) + "\"");
    } else if (dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac)) {
            throw ParseError("malformed decimal: \"" + std::string(text) + "\"");
        }
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = (head[0] == '-');
            head.remove_prefix(1);
        }
        if (!all_digits(head)) {
            throw ParseError("malformed decimal: \"" + std::string(text) + "\"");
        }
        num = mpz_class(std::string(head) + std::string(frac), 10);
        if (neg) num = -num;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!parse_integer(text, num)) {
            throw ParseError("malformed integer: \"" + std::string(text) + "\"");
        }
    }

    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace lozi
