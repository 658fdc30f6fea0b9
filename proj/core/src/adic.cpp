#include "qadic/adic.hpp"

#include <stdexcept>

#include <mpfr.h>

#include <json.hpp>

namespace qadic {

namespace {

// log_4 of a positive integer, exactly 30 significant decimal digits.
std::string log4_decimal(const mpz_class& q) {
    if (q <= 0) throw std::logic_error("log4_decimal: argument must be positive");
    if (q == 1) return "0";
    mpfr_t x, log4;
    mpfr_init2(x, 256);
    mpfr_init2(log4, 256);
    mpfr_set_z(x, q.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_set_ui(log4, 4, MPFR_RNDN);
    mpfr_log(log4, log4, MPFR_RNDN);
    mpfr_div(x, x, log4, MPFR_RNDN);

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, 30, x, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    mpfr_clear(x);
    mpfr_clear(log4);

    // value = 0.digits * 10^exp10; q >= 2 keeps it positive
    if (exp10 <= 0)
        return "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
    if (static_cast<std::size_t>(exp10) >= digits.size()) return digits;
    return digits.substr(0, static_cast<std::size_t>(exp10)) + "." +
           digits.substr(static_cast<std::size_t>(exp10));
}

}  // namespace

mpz_class s4_value(const QuaternarySequence& s) {
    mpz_class value = 0;
    for (std::size_t i = s.period(); i-- > 0;) {
        value <<= 2;
        value += s.digits[i];
    }
    return value;
}

mpz_class sequence_residue(const QuaternarySequence& s, const mpz_class& modulus) {
    if (modulus <= 0)
        throw std::invalid_argument("sequence_residue: modulus must be positive");
    mpz_class r = 0;
    for (std::size_t i = s.period(); i-- > 0;) {
        r <<= 2;
        r += s.digits[i];
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    }
    return r;
}

AdicReport complexity_report(const QuaternarySequence& s) {
    const std::size_t n = s.period();
    if (n < 1)
        throw std::invalid_argument("complexity_report: empty sequence");

    AdicReport report;
    report.period = n;
    report.modulus = (mpz_class(1) << (2 * n)) - 1;
    report.s4 = s4_value(s);
    // gcd(m, 0) = m, so the all-zero sequence lands on quotient 1.
    mpz_gcd(report.gcd.get_mpz_t(), report.modulus.get_mpz_t(),
            report.s4.get_mpz_t());
    report.quotient = report.modulus / report.gcd;
    report.phi4_log4 = log4_decimal(report.quotient);

    const mpz_class q1 = report.quotient + 1;
    report.fcsr_length = mpz_sizeinbase(q1.get_mpz_t(), 4) - 1;  // exact for base 4

    if (n <= 16) {
        report.threshold_ok = report.quotient >= 1;
    } else {
        mpz_class q6;
        mpz_pow_ui(q6.get_mpz_t(), report.quotient.get_mpz_t(), 6);
        report.threshold_ok = q6 > (mpz_class(1) << (2 * (n - 16)));
    }
    return report;
}

GcdSplit gcd_split(const QuaternarySequence& s) {
    const std::size_t n = s.period();
    if (n % 2 != 0)
        throw std::invalid_argument("gcd_split: period must be even");
    const mpz_class half = mpz_class(1) << n;  // 4^{N/2}
    const mpz_class value = s4_value(s);
    GcdSplit split;
    mpz_class m;
    m = half - 1;
    mpz_gcd(split.minus_part.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    m = half + 1;
    mpz_gcd(split.plus_part.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    return split;
}

TheoremPrediction predict_gcd(Family family, std::uint64_t param) {
    TheoremPrediction pred;
    pred.family = family;
    pred.param = param;
    switch (family) {
        case Family::g1: {
            [[maybe_unused]] OddPrime p(param);
            if (param % 4 != 1)
                throw std::invalid_argument("g1 prediction requires p = 1 (mod 4)");
            pred.predicted_minus = 3;
            if ((param + 2) % 5 == 0) {
                pred.predicted_plus = 5;
                pred.branch = "5|(p+2)";
            } else {
                pred.predicted_plus = 1;
                pred.branch = "else";
            }
            break;
        }
        case Family::g2: {
            [[maybe_unused]] OddPrime p(param);
            if (param % 4 != 3)
                throw std::invalid_argument("g2 prediction requires p = 3 (mod 4)");
            pred.predicted_minus = 1;
            if ((param - 2) % 5 == 0) {
                pred.predicted_plus = 5;
                pred.branch = "5|(p-2)";
            } else {
                pred.predicted_plus = 1;
                pred.branch = "else";
            }
            break;
        }
        case Family::g3: {
            if (param < 2 || param > 24)
                throw std::invalid_argument("g3 prediction requires n in 2..24");
            const std::uint64_t m = (std::uint64_t(1) << param) - 1;  // 2^n - 1
            pred.predicted_minus = 1;
            pred.predicted_plus = ((mpz_class(1) << (2 * m)) + 1) / 5;
            pred.branch = "always";
            break;
        }
        case Family::external:
            throw std::invalid_argument("no gcd prediction for external sequences");
    }
    pred.predicted_gcd = pred.predicted_minus * pred.predicted_plus;
    return pred;
}

VerifyResult verify_theorem(Family family, std::uint64_t param) {
    const TheoremPrediction pred = predict_gcd(family, param);

    QuaternarySequence seq;
    switch (family) {
        case Family::g1: seq = build_g1(OddPrime(param)); break;
        case Family::g2: seq = build_g2(OddPrime(param)); break;
        case Family::g3:
            seq = build_g3(msequence(first_primitive_poly(static_cast<unsigned>(param))));
            break;
        case Family::external:
            throw std::invalid_argument("cannot verify external sequences");
    }

    const AdicReport report = complexity_report(seq);
    const GcdSplit split = gcd_split(seq);

    VerifyResult result;
    result.family = family;
    result.param = param;
    result.period = seq.period();
    result.predicted_gcd = pred.predicted_gcd;
    result.computed_gcd = report.gcd;
    result.gcd_minus = split.minus_part;
    result.gcd_plus = split.plus_part;
    result.branch = pred.branch;
    result.pass = (result.computed_gcd == result.predicted_gcd);
    return result;
}

std::string to_json_string(const AdicReport& report) {
    nlohmann::ordered_json j;
    j["period"] = report.period;
    j["s4"] = report.s4.get_str();
    j["gcd"] = report.gcd.get_str();
    j["quotient"] = report.quotient.get_str();
    j["phi4_log4"] = report.phi4_log4;
    j["fcsr_length"] = std::to_string(report.fcsr_length);
    j["threshold_ok"] = report.threshold_ok;
    return j.dump();
}

}  // namespace qadic
