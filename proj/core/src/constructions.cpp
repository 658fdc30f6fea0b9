#include "qadic/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace qadic {

std::string family_name(Family f) {
    switch (f) {
        case Family::g1: return "g1";
        case Family::g2: return "g2";
        case Family::g3: return "g3";
        case Family::external: return "external";
    }
    throw std::logic_error("family_name: bad enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "g1") return Family::g1;
    if (name == "g2") return Family::g2;
    if (name == "g3") return Family::g3;
    if (name == "external") return Family::external;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::uint8_t gray_map(unsigned a, unsigned e) {
    if (a > 1 || e > 1)
        throw std::invalid_argument("gray_map: arguments must be bits");
    static constexpr std::uint8_t table[2][2] = {{0, 1}, {3, 2}};
    return table[a][e];
}

LegendrePair legendre_sequences(OddPrime p) {
    const std::uint64_t pv = p.value();
    std::vector<std::uint8_t> b(pv, 0);
    for (std::uint64_t t = 1; t < pv; ++t)
        b[t] = legendre_symbol(static_cast<std::int64_t>(t), p) == -1 ? 1 : 0;
    std::vector<std::uint8_t> c = b;
    c[0] = 1;
    const std::string tag = "(p=" + std::to_string(pv) + ")";
    return {{std::move(b), "legendre_b" + tag}, {std::move(c), "legendre_c" + tag}};
}

QuaternarySequence build_g1(OddPrime p) {
    if (p.value() % 4 != 1)
        throw std::invalid_argument("g1 requires p = 1 (mod 4); p=" +
                                    std::to_string(p.value()) + " is " +
                                    std::to_string(p.value() % 4) + " (mod 4)");
    const auto [b, c] = legendre_sequences(p);
    const std::uint64_t pv = p.value();
    std::vector<std::uint8_t> digits(2 * pv);
    for (std::uint64_t t = 0; t < 2 * pv; ++t) {
        const std::uint64_t r = t % pv;
        digits[t] = (t % 2 == 0) ? gray_map(b.bits[r], b.bits[r])
                                 : gray_map(c.bits[r], 1u - c.bits[r]);
    }
    return {std::move(digits), Family::g1, pv};
}

QuaternarySequence build_g2(OddPrime p) {
    if (p.value() % 4 != 3)
        throw std::invalid_argument("g2 requires p = 3 (mod 4); p=" +
                                    std::to_string(p.value()) + " is " +
                                    std::to_string(p.value() % 4) + " (mod 4)");
    const auto [b, c] = legendre_sequences(p);
    const std::uint64_t pv = p.value();
    std::vector<std::uint8_t> digits(2 * pv);
    for (std::uint64_t t = 0; t < 2 * pv; ++t) {
        const std::uint64_t r = t % pv;
        digits[t] = (t % 2 == 0) ? gray_map(b.bits[r], c.bits[r])
                                 : gray_map(b.bits[r], 1u - c.bits[r]);
    }
    return {std::move(digits), Family::g2, pv};
}

std::pair<unsigned, std::uint64_t> crt_index(std::uint64_t h, unsigned n) {
    if (n < 1 || n > 63)
        throw std::invalid_argument("crt_index: n out of range");
    const std::uint64_t half = (std::uint64_t(1) << n) - 1;
    if (h >= 2 * half)
        throw std::invalid_argument("crt_index: index " + std::to_string(h) +
                                    " outside [0, " + std::to_string(2 * half) + ")");
    return {static_cast<unsigned>(h & 1), h % half};
}

QuaternarySequence build_g3(const BinarySequence& s) {
    const std::size_t period = s.period();
    // period must have the form 2^n - 1, n >= 2
    if (!std::has_single_bit(period + 1) || period < 3)
        throw std::invalid_argument("g3 requires a base period of the form 2^n - 1 "
                                    "with n >= 2; got " + std::to_string(period));
    const unsigned n = static_cast<unsigned>(std::bit_width(period));

    if (auto tau = first_non_ideal_shift(s))
        throw std::invalid_argument(
            "g3 base sequence lacks ideal autocorrelation: C(" +
            std::to_string(*tau) + ") = " +
            std::to_string(binary_autocorrelation(s, *tau)) + " != -1");

    const std::size_t expected_weight = std::size_t(1) << (n - 1);
    if (weight(s) != expected_weight)
        throw std::invalid_argument("g3 base sequence must have weight " +
                                    std::to_string(expected_weight) + "; got " +
                                    std::to_string(weight(s)));

    std::vector<std::uint8_t> digits(2 * period);
    for (std::uint64_t t = 0; t < 2 * period; ++t) {
        const auto [eps, r] = crt_index(t, n);
        const unsigned u = s.bits[r];
        const unsigned v = (eps == 0) ? u : 1u - u;
        digits[t] = gray_map(u, v);
    }
    return {std::move(digits), Family::g3, n};
}

}  // namespace qadic
