#include "allpay/payoff.hpp"

#include <stdexcept>

#include "allpay/errors.hpp"

namespace allpay {

Rational h_value(const FiniteDist& x, const FiniteDist& y) {
    Rational direct;
    for (const auto& [i, px] : x.weights())
        for (const auto& [j, py] : y.weights()) {
            if (i > j)
                direct += px * py;
            else if (i < j)
                direct -= px * py;
        }

    // Independent route: 1 - sum_i Pr(X=i) (Pr(Y>=i) + Pr(Y>=i+1)).
    Rational series(1);
    for (const auto& [i, px] : x.weights()) series -= px * (y.tail(i) + y.tail(i + 1));

    if (direct != series) throw std::logic_error("h_value: double sum and tail series disagree");
    return direct;
}

Rational allpay_payoff(const Rational& v, const FiniteDist& x, const FiniteDist& y) {
    if (v.sign() <= 0) throw invalid_valuation_error("allpay_payoff: prize value must be positive");

    Rational win, tie;
    for (const auto& [i, px] : x.weights())
        for (const auto& [j, py] : y.weights()) {
            if (i > j)
                win += px * py;
            else if (i == j)
                tie += px * py;
        }
    Rational ex = x.expectation();
    Rational direct = v * win + v / 2 * tie - ex;

    Rational via_h = v / 2 * (h_value(x, y) - (Rational(2) * ex / v - Rational(1)));
    if (direct != via_h) throw std::logic_error("allpay_payoff: definitional and h_value forms disagree");
    return direct;
}

BoundKind::BoundKind(Family f, int j, int m, Rational alpha)
    : family_(f), j_(j), m_(m), alpha_(std::move(alpha)) {}

BoundKind BoundKind::uniform_odd(int m) {
    if (m < 1) throw invalid_parameter_error("bound uniform_odd: need m >= 1");
    return {Family::UniformOdd, 0, m, Rational(0)};
}

BoundKind BoundKind::uniform_even(int m) {
    if (m < 0) throw invalid_parameter_error("bound uniform_even: need m >= 0");
    return {Family::UniformEven, 0, m, Rational(0)};
}

BoundKind BoundKind::w_smoothed(int j, int m) {
    if (m < 2 || j < 1 || j > m - 1) throw invalid_parameter_error("bound w_smoothed: need m >= 2 and 1 <= j <= m-1");
    return {Family::WSmoothed, j, m, Rational(0)};
}

BoundKind BoundKind::odd_shift(int m) {
    if (m < 2) throw invalid_parameter_error("bound odd_shift: need m >= 2");
    return {Family::OddShift, 0, m, Rational(0)};
}

BoundKind BoundKind::v_smoothed(int j, int m) {
    if (m < 1 || j < 1 || j > m) throw invalid_parameter_error("bound v_smoothed: need m >= 1 and 1 <= j <= m");
    return {Family::VSmoothed, j, m, Rational(0)};
}

BoundKind BoundKind::odd_odd_mix(int m, Rational alpha) {
    if (m < 1) throw invalid_parameter_error("bound odd_odd_mix: need m >= 1");
    if (alpha < Rational(0) || alpha > Rational(1)) throw invalid_parameter_error("bound odd_odd_mix: need alpha in [0,1]");
    return {Family::OddOddMix, 0, m, std::move(alpha)};
}

BoundKind BoundKind::even_odd_mix(int m, Rational alpha) {
    if (m < 0) throw invalid_parameter_error("bound even_odd_mix: need m >= 0");
    if (alpha < Rational(0) || alpha > Rational(1)) throw invalid_parameter_error("bound even_odd_mix: need alpha in [0,1]");
    return {Family::EvenOddMix, 0, m, std::move(alpha)};
}

BoundKind BoundKind::v_odd_mix(int j, int m, Rational alpha) {
    if (m < 1 || j < 1 || j > m) throw invalid_parameter_error("bound v_odd_mix: need m >= 1 and 1 <= j <= m");
    Rational scaled = alpha * Rational(2 * m + 1, m + 1);
    if (scaled < Rational(0) || scaled > Rational(1))
        throw invalid_parameter_error("bound v_odd_mix: need alpha in [0, (m+1)/(2m+1)]");
    return {Family::VOddMix, j, m, std::move(alpha)};
}

BoundKind BoundKind::v_even_mix(int j, int m, Rational alpha) {
    if (m < 1 || j < 1 || j > m) throw invalid_parameter_error("bound v_even_mix: need m >= 1 and 1 <= j <= m");
    Rational scaled = alpha * Rational(2 * m + 1, m + 1);
    if (scaled < Rational(0) || scaled > Rational(1))
        throw invalid_parameter_error("bound v_even_mix: need alpha in [0, (m+1)/(2m+1)]");
    return {Family::VEvenMix, j, m, std::move(alpha)};
}

BoundKind BoundKind::v_odd_up_mix(int j, int m, Rational alpha) {
    if (m < 1 || j < 1 || j > m) throw invalid_parameter_error("bound v_odd_up_mix: need m >= 1 and 1 <= j <= m");
    Rational scaled = (Rational(1) - alpha) * Rational(2 * m + 1, m);
    if (scaled < Rational(0) || scaled > Rational(1))
        throw invalid_parameter_error("bound v_odd_up_mix: need alpha in [(m+1)/(2m+1), 1]");
    return {Family::VOddUpMix, j, m, std::move(alpha)};
}

FiniteDist BoundKind::block() const {
    const Rational one(1);
    switch (family_) {
        case Family::UniformOdd: return allpay::uniform_odd(m_);
        case Family::UniformEven: return allpay::uniform_even(m_);
        case Family::WSmoothed: return allpay::w_dist(j_, m_);
        case Family::OddShift: return allpay::uniform_odd_shift(m_);
        case Family::VSmoothed: return allpay::v_dist(j_, m_);
        case Family::OddOddMix:
            return mix({{one - alpha_, allpay::uniform_odd(m_)}, {alpha_, allpay::uniform_odd(m_ + 1)}});
        case Family::EvenOddMix:
            return mix({{one - alpha_, allpay::uniform_even(m_)}, {alpha_, allpay::uniform_odd(m_ + 1)}});
        case Family::VOddMix: {
            Rational w = alpha_ * Rational(2 * m_ + 1, m_ + 1);
            return mix({{w, allpay::v_dist(j_, m_)}, {one - w, allpay::uniform_odd(m_)}});
        }
        case Family::VEvenMix: {
            Rational w = alpha_ * Rational(2 * m_ + 1, m_ + 1);
            return mix({{w, allpay::v_dist(j_, m_)}, {one - w, allpay::uniform_even(m_)}});
        }
        case Family::VOddUpMix: {
            Rational w = (one - alpha_) * Rational(2 * m_ + 1, m_);
            return mix({{w, allpay::v_dist(j_, m_)}, {one - w, allpay::uniform_odd(m_ + 1)}});
        }
    }
    throw std::logic_error("BoundKind::block: unknown family");
}

std::string BoundKind::name() const {
    auto jm = "(j=" + std::to_string(j_) + ",m=" + std::to_string(m_) + ")";
    auto ma = "(m=" + std::to_string(m_) + ",alpha=" + alpha_.str() + ")";
    auto jma = "(j=" + std::to_string(j_) + ",m=" + std::to_string(m_) + ",alpha=" + alpha_.str() + ")";
    switch (family_) {
        case Family::UniformOdd: return "uniform_odd(m=" + std::to_string(m_) + ")";
        case Family::UniformEven: return "uniform_even(m=" + std::to_string(m_) + ")";
        case Family::WSmoothed: return "w_smoothed" + jm;
        case Family::OddShift: return "odd_shift(m=" + std::to_string(m_) + ")";
        case Family::VSmoothed: return "v_smoothed" + jm;
        case Family::OddOddMix: return "odd_odd_mix" + ma;
        case Family::EvenOddMix: return "even_odd_mix" + ma;
        case Family::VOddMix: return "v_odd_mix" + jma;
        case Family::VEvenMix: return "v_even_mix" + jma;
        case Family::VOddUpMix: return "v_odd_up_mix" + jma;
    }
    return "?";
}

namespace {

// Tail conditions under which each elementary block's bound is an equality.
bool odd_tight(const FiniteDist& y, int m) { return y.tail(2 * m + 1).is_zero(); }
bool even_tight(const FiniteDist& y, int m) { return y.tail(2 * m + 2).is_zero(); }
bool shift_tight(const FiniteDist& y, int m) { return y.tail(2 * m).is_zero(); }
bool v_tight(const FiniteDist& y, int m) { return y.tail(2 * m + 2).is_zero(); }

}  // namespace

HBound h_lower_bound(const BoundKind& kind, const FiniteDist& y) {
    const int m = kind.m();
    const int j = kind.j();
    const Rational& a = kind.alpha();
    const Rational one(1);
    const Rational e = y.expectation();
    // E(y) coefficient shared by the mean-(m+alpha) mixed bounds.
    const Rational mixed_coef =
        m >= 1 ? Rational(1, m + 1) + (one - a) / Rational(m * (m + 1)) : Rational(0);

    switch (kind.family()) {
        case BoundKind::Family::UniformOdd:
            return {one - e / m, odd_tight(y, m)};
        case BoundKind::Family::UniformEven:
            return {one - (e + 1) / (m + 1), even_tight(y, m)};
        case BoundKind::Family::WSmoothed:
            return {one - e / m + (y.prob(2 * j) - y.prob(0)) / (2 * m), odd_tight(y, m)};
        case BoundKind::Family::OddShift:
            return {one - (e - 1) / (m - 1) - y.prob(0) / (m - 1), shift_tight(y, m)};
        case BoundKind::Family::VSmoothed:
            return {one - Rational(2) * e / (2 * m + 1) + y.prob(2 * j - 1) / (2 * m + 1), v_tight(y, m)};
        case BoundKind::Family::OddOddMix: {
            bool tight = (a == one || odd_tight(y, m)) && (a.is_zero() || odd_tight(y, m + 1));
            return {one - e * mixed_coef, tight};
        }
        case BoundKind::Family::EvenOddMix: {
            bool tight = (a == one || even_tight(y, m)) && (a.is_zero() || odd_tight(y, m + 1));
            return {one - (e + 1) / (m + 1) + a / (m + 1), tight};
        }
        case BoundKind::Family::VOddMix: {
            Rational w = a * Rational(2 * m + 1, m + 1);
            bool tight = (w == one || odd_tight(y, m)) && (w.is_zero() || v_tight(y, m));
            return {one - e * mixed_coef + a / (m + 1) * y.prob(2 * j - 1), tight};
        }
        case BoundKind::Family::VEvenMix: {
            Rational bound = one - e * mixed_coef + a / (m + 1) * y.prob(2 * j - 1) +
                             (e - m) / (m + 1) * ((one - a) / m - a / (m + 1));
            return {bound, even_tight(y, m)};
        }
        case BoundKind::Family::VOddUpMix: {
            Rational w = (one - a) * Rational(2 * m + 1, m);
            bool tight = (w.is_zero() || v_tight(y, m)) && (w == one || odd_tight(y, m + 1));
            return {one - e * mixed_coef + (one - a) / m * y.prob(2 * j - 1), tight};
        }
    }
    throw std::logic_error("h_lower_bound: unknown family");
}

}  // namespace allpay
