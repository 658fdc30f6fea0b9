#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>

#include "qadic/adic.hpp"
#include "qadic/correlation.hpp"

using namespace qadic;

namespace {

QuaternarySequence random_even_sequence(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> half(1, 100);  // periods 2..200
    std::uniform_int_distribution<int> digit(0, 3);
    QuaternarySequence s;
    s.digits.resize(2 * half(rng));
    for (auto& d : s.digits) d = static_cast<std::uint8_t>(digit(rng));
    return s;
}

QuaternarySequence from_digits(std::vector<std::uint8_t> digits) {
    return {std::move(digits), Family::external, 0};
}

}  // namespace

TEST_CASE("s4_value") {
    CHECK(s4_value(from_digits({1, 1})) == 5);
    CHECK(s4_value(build_g2(OddPrime(3))) == 3109);  // 1 + 4 + 2*16 + 3*1024
    CHECK(s4_value(from_digits({0, 0, 0})) == 0);
}

TEST_CASE("s4_value round-trips through base-4 digits") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_even_sequence(rng);
        mpz_class v = s4_value(s);
        for (std::size_t i = 0; i < s.period(); ++i) {
            CHECK(static_cast<std::uint8_t>(mpz_class(v % 4).get_ui()) == s.digits[i]);
            v >>= 2;
        }
        CHECK(v == 0);
    }
}

TEST_CASE("sequence_residue equals s4 mod m") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_even_sequence(rng);
        const mpz_class m = (mpz_class(1) << (s.period() + 3)) - 7;
        mpz_class expected;
        mpz_class v = s4_value(s);
        mpz_mod(expected.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        CHECK(sequence_residue(s, m) == expected);
    }
    CHECK_THROWS_AS(sequence_residue(from_digits({1}), mpz_class(0)),
                    std::invalid_argument);
}

TEST_CASE("complexity_report fixtures") {
    SUBCASE("g1 p=5") {
        const auto r = complexity_report(build_g1(OddPrime(5)));
        CHECK(r.period == 10);
        CHECK(r.gcd == 3);
        CHECK(r.quotient == ((mpz_class(1) << 20) - 1) / 3);  // 349525
        CHECK(r.quotient == 349525);
        CHECK(r.fcsr_length == 9);  // 4^9 <= 349526 < 4^10
        CHECK(r.threshold_ok);
        const double phi = std::stod(r.phi4_log4);
        CHECK(phi == doctest::Approx(std::log(349525.0) / std::log(4.0)).epsilon(1e-12));
        // exactly 30 significant digits
        std::size_t digits = 0;
        for (char c : r.phi4_log4)
            if (c >= '0' && c <= '9') ++digits;
        CHECK(digits == 30);
        CHECK(r.phi4_log4.substr(0, 16) == "9.20751806170849");
    }
    SUBCASE("g2 p=7") {
        CHECK(complexity_report(build_g2(OddPrime(7))).gcd == 5);
    }
    SUBCASE("g3 n=4") {
        const auto r =
            complexity_report(build_g3(msequence(Gf2Poly::parse("4,1,0"))));
        CHECK(r.gcd == 214748365);
        CHECK(r.gcd == ((mpz_class(1) << 30) + 1) / 5);
        CHECK(r.quotient == 5 * ((mpz_class(1) << 30) - 1));
        CHECK(r.fcsr_length == 16);
    }
    SUBCASE("all-zero sequence is maximally insecure") {
        const auto r = complexity_report(from_digits({0, 0, 0, 0}));
        CHECK(r.s4 == 0);
        CHECK(r.gcd == r.modulus);  // gcd(m, 0) = m
        CHECK(r.quotient == 1);
        CHECK(r.phi4_log4 == "0");
        CHECK(r.fcsr_length == 0);
        CHECK(r.threshold_ok);  // N <= 16 satisfies the bound trivially
        const auto r20 = complexity_report(from_digits(std::vector<std::uint8_t>(20, 0)));
        CHECK_FALSE(r20.threshold_ok);
    }
    CHECK_THROWS_AS(complexity_report(from_digits({})), std::invalid_argument);
}

TEST_CASE("gcd_split fixtures") {
    const auto s1 = gcd_split(build_g1(OddPrime(5)));
    CHECK(s1.minus_part == 3);
    CHECK(s1.plus_part == 1);

    const auto s2 = gcd_split(build_g1(OddPrime(13)));  // 5 | 13+2
    CHECK(s2.minus_part == 3);
    CHECK(s2.plus_part == 5);

    const auto s3 = gcd_split(build_g2(OddPrime(7)));  // 5 | 7-2
    CHECK(s3.minus_part == 1);
    CHECK(s3.plus_part == 5);

    CHECK_THROWS_AS(gcd_split(from_digits({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("report invariants: gcd divides the modulus exactly") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_even_sequence(rng);
        const auto r = complexity_report(s);
        CHECK(mpz_divisible_p(r.modulus.get_mpz_t(), r.gcd.get_mpz_t()));
        CHECK(r.quotient * r.gcd == r.modulus);
        mpz_class g2;
        mpz_gcd(g2.get_mpz_t(), r.modulus.get_mpz_t(), r.s4.get_mpz_t());
        CHECK(r.gcd == g2);
    }
}

TEST_CASE("gcd_split product law on random even periods") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_even_sequence(rng);
        const auto split = gcd_split(s);
        const auto report = complexity_report(s);
        CHECK(split.minus_part * split.plus_part == report.gcd);
    }
}

TEST_CASE("predict_gcd") {
    const auto p13 = predict_gcd(Family::g1, 13);
    CHECK(p13.predicted_gcd == 15);
    CHECK(p13.branch == "5|(p+2)");
    CHECK(p13.predicted_minus == 3);
    CHECK(p13.predicted_plus == 5);

    const auto p5 = predict_gcd(Family::g1, 5);
    CHECK(p5.predicted_gcd == 3);
    CHECK(p5.branch == "else");

    CHECK(predict_gcd(Family::g2, 3).predicted_gcd == 1);
    CHECK(predict_gcd(Family::g2, 7).predicted_gcd == 5);
    CHECK(predict_gcd(Family::g3, 4).predicted_gcd == 214748365);

    CHECK_THROWS_AS(predict_gcd(Family::g1, 7), std::invalid_argument);
    CHECK_THROWS_AS(predict_gcd(Family::g2, 5), std::invalid_argument);
    CHECK_THROWS_AS(predict_gcd(Family::g3, 1), std::invalid_argument);
    CHECK_THROWS_AS(predict_gcd(Family::g1, 15), std::invalid_argument);
    CHECK_THROWS_AS(predict_gcd(Family::external, 5), std::invalid_argument);
}

TEST_CASE("verify_theorem") {
    const auto r1 = verify_theorem(Family::g1, 5);
    CHECK(r1.pass);
    CHECK(r1.computed_gcd == 3);
    CHECK(r1.period == 10);

    const auto r2 = verify_theorem(Family::g2, 7);
    CHECK(r2.pass);
    CHECK(r2.computed_gcd == 5);
    CHECK(r2.gcd_minus == 1);
    CHECK(r2.gcd_plus == 5);

    const auto r3 = verify_theorem(Family::g3, 4);
    CHECK(r3.pass);
    CHECK(r3.computed_gcd == 214748365);
}

TEST_CASE("report JSON shape") {
    const auto j = nlohmann::json::parse(
        to_json_string(complexity_report(build_g1(OddPrime(5)))));
    CHECK(j["period"] == 10);
    CHECK(j["s4"] == "445668");
    CHECK(j["gcd"] == "3");
    CHECK(j["quotient"] == "349525");
    CHECK(j["fcsr_length"] == "9");
    CHECK(j["threshold_ok"] == true);
    CHECK(j["phi4_log4"].is_string());
}
