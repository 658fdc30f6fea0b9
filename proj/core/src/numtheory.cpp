#include "qadic/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace qadic {

namespace {

constexpr std::uint64_t kPrimalityBound = 1'000'000'000'000ull;  // 10^12

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Canonical residue in [0, m).
mpz_class mod_canonical(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// sum_{t=1}^{p-1} (t/p) 4^t as an exact integer.
mpz_class legendre_power_sum(OddPrime p) {
    mpz_class sum = 0;
    mpz_class term;
    for (std::uint64_t t = 1; t < p.value(); ++t) {
        term = 1;
        term <<= 2 * t;
        if (legendre_symbol(static_cast<std::int64_t>(t), p) == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n >= kPrimalityBound)
        throw std::invalid_argument("is_prime: input " + std::to_string(n) +
                                    " exceeds the desk-scale bound 10^12");
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

OddPrime::OddPrime(std::uint64_t value) : value_(value) {
    if (value == 2 || !is_prime(value))
        throw std::invalid_argument("OddPrime: " + std::to_string(value) +
                                    " is not an odd prime");
}

int legendre_symbol(std::int64_t a, OddPrime p) {
    const std::uint64_t pv = p.value();
    std::int64_t rem = a % static_cast<std::int64_t>(pv);
    if (rem < 0) rem += static_cast<std::int64_t>(pv);
    const std::uint64_t ar = static_cast<std::uint64_t>(rem);
    if (ar == 0) return 0;
    const std::uint64_t e = powmod(ar, (pv - 1) / 2, pv);
    return e == 1 ? 1 : -1;
}

std::set<std::uint64_t> quadratic_residues(OddPrime p) {
    std::set<std::uint64_t> qr;
    for (std::uint64_t x = 1; x < p.value(); ++x)
        qr.insert(mulmod(x, x, p.value()));
    return qr;
}

Lemma2Result check_lemma2(OddPrime p) {
    const mpz_class modulus = (mpz_class(1) << (2 * p.value())) - 1;  // 4^p - 1
    const mpz_class sum = legendre_power_sum(p);
    const mpz_class lhs = mod_canonical(sum * sum, modulus);

    const int chi = legendre_symbol(-1, p);  // (-1/p)
    const mpz_class third = modulus / 3;     // (4^p - 1)/3, exact
    const mpz_class rhs =
        mod_canonical(-chi * third + chi * mpz_class(p.value()), modulus);

    return {lhs == rhs, lhs, rhs};
}

bool check_lemma3(std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("check_lemma3: " + std::to_string(p) +
                                    " is not prime");
    const mpz_class v = (mpz_class(1) << (2 * p)) + 1;  // 4^p + 1
    const bool divisible = mpz_divisible_ui_p(v.get_mpz_t(), 25) != 0;
    return divisible == (p == 5);
}

Lemma4Result check_lemma4(OddPrime p) {
    const std::uint64_t pv = p.value();
    mpz_class t_sum = 0;
    mpz_class term;
    for (std::uint64_t t = 1; t < pv; ++t) {  // even exponents 4^{2t}, index 2t mod p
        term = 1;
        term <<= 4 * t;
        if (legendre_symbol(static_cast<std::int64_t>(2 * t), p) == 1)
            t_sum += term;
        else
            t_sum -= term;
    }
    for (std::uint64_t t = 0; t < pv; ++t) {  // odd exponents; t = (p-1)/2 hits 2t+1 = p
        if (t == (pv - 1) / 2) continue;
        term = 1;
        term <<= 2 * (2 * t + 1);
        if (legendre_symbol(static_cast<std::int64_t>(2 * t + 1), p) == 1)
            t_sum += term;
        else
            t_sum -= term;
    }

    const mpz_class q_minus = (mpz_class(1) << (2 * pv)) - 1;
    const mpz_class q_plus = (mpz_class(1) << (2 * pv)) + 1;
    const mpz_class mod_minus = mod_canonical(t_sum, q_minus);
    const mpz_class mod_plus = mod_canonical(t_sum, q_plus);

    const mpz_class expected_minus =
        mod_canonical(2 * legendre_power_sum(p), q_minus);

    return {mod_minus == expected_minus && mod_plus == 0, mod_minus, mod_plus};
}

}  // namespace qadic
