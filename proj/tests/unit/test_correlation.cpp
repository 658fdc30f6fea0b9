#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <json.hpp>

#include "qadic/correlation.hpp"

using namespace qadic;

namespace {

// Independent route: the same sum through std::complex<double>. All exact
// values here are small integers, so rounding recovers them exactly.
GaussianInt autocorr_reference(const QuaternarySequence& s, std::size_t tau) {
    const std::size_t n = s.period();
    std::complex<double> sum = 0;
    const std::complex<double> zeta(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = (s.digits[i] - s.digits[(i + tau) % n] + 4) % 4;
        sum += std::pow(zeta, k);
    }
    return {std::llround(sum.real()), std::llround(sum.imag())};
}

QuaternarySequence random_sequence(std::mt19937_64& rng, std::size_t period) {
    std::uniform_int_distribution<int> digit(0, 3);
    QuaternarySequence s;
    s.digits.resize(period);
    for (auto& d : s.digits) d = static_cast<std::uint8_t>(digit(rng));
    return s;
}

}  // namespace

TEST_CASE("autocorrelation at shift zero is the period") {
    std::mt19937_64 rng(7);
    for (std::size_t period : {1u, 4u, 9u, 30u}) {
        const auto s = random_sequence(rng, period);
        const GaussianInt c0 = autocorrelation(s, 0);
        CHECK(c0.re == static_cast<std::int64_t>(period));
        CHECK(c0.im == 0);
    }
}

TEST_CASE("autocorrelation examples") {
    const auto g1 = build_g1(OddPrime(5));
    const GaussianInt c1 = autocorrelation(g1, 1);
    CHECK(c1.im == 0);
    CHECK((c1.re == 0 || c1.re == -2));

    const auto g2 = build_g2(OddPrime(3));
    const GaussianInt c3 = autocorrelation(g2, 3);
    CHECK(c3.im == 0);
    CHECK((c3.re == 0 || c3.re == -2));

    CHECK_THROWS_AS(autocorrelation(g1, 10), std::invalid_argument);
}

TEST_CASE("autocorrelation matches the complex<double> reference") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = random_sequence(rng, 2 + trial);
        for (std::size_t tau = 0; tau < s.period(); ++tau) {
            const GaussianInt a = autocorrelation(s, tau);
            const GaussianInt b = autocorr_reference(s, tau);
            CHECK(a == b);
        }
    }
}

TEST_CASE("full_profile fixtures") {
    using Dist = std::map<GaussianInt, std::int64_t>;

    const auto p1 = full_profile(build_g1(OddPrime(5)));
    CHECK(p1.distribution == Dist{{{10, 0}, 1}, {{0, 0}, 5}, {{-2, 0}, 4}});

    const auto p2 = full_profile(build_g2(OddPrime(3)));
    CHECK(p2.distribution == Dist{{{6, 0}, 1}, {{0, 0}, 3}, {{-2, 0}, 2}});

    const auto p3 = full_profile(build_g3(msequence(Gf2Poly::parse("4,1,0"))));
    CHECK(p3.distribution == Dist{{{30, 0}, 1}, {{0, 0}, 15}, {{-2, 0}, 14}});
}

TEST_CASE("profile counts always sum to the period") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_sequence(rng, 3 + 7 * trial);
        const auto prof = full_profile(s);
        std::int64_t total = 0;
        for (const auto& [v, c] : prof.distribution) total += c;
        CHECK(total == static_cast<std::int64_t>(s.period()));
        CHECK(prof.values[0] == GaussianInt{static_cast<std::int64_t>(s.period()), 0});
    }
}

TEST_CASE("conjugate symmetry C(N - tau) = conj(C(tau))") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_sequence(rng, 5 + 9 * trial);
        const auto prof = full_profile(s);
        const std::size_t n = s.period();
        for (std::size_t tau = 1; tau < n; ++tau)
            CHECK(prof.values[n - tau] == prof.values[tau].conj());
    }
}

TEST_CASE("is_ideal_quaternary") {
    CHECK(is_ideal_quaternary(full_profile(build_g1(OddPrime(13)))));
    CHECK(is_ideal_quaternary(full_profile(build_g3(msequence(first_primitive_poly(3))))));

    const QuaternarySequence constant{{0, 0, 0, 0}, Family::external, 0};
    const auto prof = full_profile(constant);
    CHECK(prof.distribution ==
          std::map<GaussianInt, std::int64_t>{{{4, 0}, 4}});
    CHECK_FALSE(is_ideal_quaternary(prof));

    // odd period never qualifies
    CHECK_FALSE(is_ideal_quaternary(full_profile({{0, 1, 2}, Family::external, 0})));
}

TEST_CASE("is_balanced") {
    const auto g1 = build_g1(OddPrime(5));
    const auto bal = is_balanced(g1.digits, 4);
    CHECK(bal.balanced);
    CHECK(bal.counts == std::vector<std::int64_t>{3, 2, 2, 3});

    const std::vector<std::uint8_t> two_even{0, 0, 1, 1};
    CHECK(is_balanced(two_even, 2).balanced);
    const std::vector<std::uint8_t> two_skew{0, 0, 0, 1};
    CHECK_FALSE(is_balanced(two_skew, 2).balanced);

    const std::vector<std::uint8_t> bad{0, 7};
    CHECK_THROWS_AS(is_balanced(bad, 4), std::invalid_argument);
    CHECK_THROWS_AS(is_balanced(two_even, 1), std::invalid_argument);
}

TEST_CASE("profile JSON shape") {
    const auto prof = full_profile(build_g2(OddPrime(3)));
    const auto j = nlohmann::json::parse(to_json_string(prof));
    CHECK(j["period"] == 6);
    REQUIRE(j["distribution"].is_array());
    CHECK(j["distribution"].size() == 3);
    // ordered by (re, im): -2 first, then 0, then the peak
    CHECK(j["distribution"][0]["re"] == -2);
    CHECK(j["distribution"][0]["count"] == 2);
    CHECK(j["distribution"][1]["re"] == 0);
    CHECK(j["distribution"][1]["count"] == 3);
    CHECK(j["distribution"][2]["re"] == 6);
    CHECK(j["distribution"][2]["count"] == 1);
    for (const auto& entry : j["distribution"]) CHECK(entry["im"] == 0);
}
