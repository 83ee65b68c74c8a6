#include "allpay/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace allpay {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return Rational(q);
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return Rational(q);
}

int Rational::floor_int() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    if (!q.fits_sint_p()) throw std::overflow_error("rational floor does not fit in int");
    return static_cast<int>(q.get_si());
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal_str(int digits) const {
    if (digits < 0) throw std::invalid_argument("decimal_str needs digits >= 0");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled_num = abs(num()) * scale;
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    if (2 * rem >= den()) quot += 1;
    std::string body = quot.get_str();
    std::string out;
    if (sign() < 0 && quot != 0) out += '-';
    if (digits == 0) {
        out += body;
        return out;
    }
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    out += body;
    return out;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class n = parse_integer(s.substr(0, slash));
        mpz_class d = parse_integer(s.substr(slash + 1));
        return Rational(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(frac)) throw std::invalid_argument("bad decimal literal: '" + std::string(text) + "'");
        bool neg = !head.empty() && head.front() == '-';
        mpz_class whole = head.empty() || head == "-" || head == "+" ? mpz_class(0) : parse_integer(head);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class n = abs(whole) * scale + mpz_class(std::string(frac), 10);
        if (neg) n = -n;
        return Rational(n, scale);
    }
    return Rational(parse_integer(s), mpz_class(1));
}

}  // namespace allpay
