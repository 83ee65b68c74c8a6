#include "allpay/statics.hpp"

#include <ostream>
#include <stdexcept>

#include "allpay/errors.hpp"

namespace allpay {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool is_even_integer(const Rational& v) { return (v / 2).is_integer(); }

}  // namespace

std::pair<Rational, Rational> continuous_payoffs(const Rational& v1, const Rational& v2) {
    if (v1.sign() <= 0 || v2.sign() <= 0)
        throw invalid_valuation_error("continuous_payoffs: valuations must be positive");
    if (v1 >= v2) return {v1 - v2, kZero};
    return {kZero, v2 - v1};
}

Rational closed_form_difference(const Rational& v1, const Rational& v2) {
    if (v2.sign() <= 0) throw invalid_valuation_error("closed_form_difference: v2 must be positive");
    if (is_even_integer(v1))
        throw invalid_parameter_error("closed_form_difference: defined only for non-even v1");
    Rational h1 = v1 / 2;
    Rational fl1 = h1.floor();
    if (v2 <= 2 * fl1) return kZero;
    if (v2 <= v1) return v2 / 2 - (v2 / 2).floor();
    if (v2 <= 2 * h1.ceil()) return v1 - fl1 - v2 / 2;
    return 2 * (h1 - fl1 - Rational(1, 2));
}

DiffInterval payoff_difference(const Rational& v1, const Rational& v2) {
    if (v1.sign() <= 0 || v2.sign() <= 0)
        throw invalid_valuation_error("payoff_difference: valuations must be positive");

    Interval disc;
    Rational cont;
    if (v2 <= v1) {
        disc = payoff_range(Valuations(v1, v2)).p2;
        cont = kZero;
    } else {
        // Player 2 is the stronger player; her payoff is P1 of the swapped game.
        disc = payoff_range(Valuations(v2, v1)).p1;
        cont = v2 - v1;
    }
    DiffInterval diff{disc.lo - cont, disc.hi - cont};

    if (!is_even_integer(v1)) {
        Rational cf = closed_form_difference(v1, v2);
        if (diff.lo != diff.hi || diff.lo != cf)
            throw std::logic_error("payoff_difference: equilibrium payoffs disagree with the closed form");
    }
    return diff;
}

std::vector<SweepRow> sweep(const Rational& v1, const Rational& v2_min, const Rational& v2_max,
                            const Rational& step) {
    if (v1.sign() <= 0) throw invalid_valuation_error("sweep: v1 must be positive");
    if (v2_min.sign() <= 0 || v2_min > v2_max) throw std::invalid_argument("sweep: need 0 < v2_min <= v2_max");
    if (step.sign() <= 0) throw std::invalid_argument("sweep: step must be positive");

    std::vector<SweepRow> rows;
    for (Rational v2 = v2_min; v2 <= v2_max; v2 += step) {
        SweepRow row;
        row.v2 = v2;
        row.roles_swapped = v2 > v1;
        if (row.roles_swapped) {
            Valuations val(v2, v1);
            row.tag = classify(val);
            auto range = payoff_range(val).p1;
            row.disc_p2_min = range.lo;
            row.disc_p2_max = range.hi;
            row.cont_p2 = v2 - v1;
        } else {
            Valuations val(v1, v2);
            row.tag = classify(val);
            auto range = payoff_range(val).p2;
            row.disc_p2_min = range.lo;
            row.disc_p2_max = range.hi;
            row.cont_p2 = kZero;
        }
        row.diff_min = row.disc_p2_min - row.cont_p2;
        row.diff_max = row.disc_p2_max - row.cont_p2;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, int decimal_digits) {
    auto render = [&](const Rational& r) {
        return decimal_digits >= 0 ? r.decimal_str(decimal_digits) : r.str();
    };
    os << "v2,disc_p2_min,disc_p2_max,cont_p2,diff_min,diff_max,case,roles_swapped\n";
    for (const auto& row : rows) {
        os << render(row.v2) << ',' << render(row.disc_p2_min) << ',' << render(row.disc_p2_max) << ','
           << render(row.cont_p2) << ',' << render(row.diff_min) << ',' << render(row.diff_max) << ','
           << case_name(row.tag) << ',' << (row.roles_swapped ? "true" : "false") << '\n';
    }
}

}  // namespace allpay
