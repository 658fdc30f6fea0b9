#include "qadic/gf2seq.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qadic {

namespace {

constexpr unsigned kMaxMseqDegree = 24;  // one period = 2^24 - 1 bits

int bit_degree(std::uint64_t a) { return static_cast<int>(std::bit_width(a)) - 1; }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t f) {
    const int df = bit_degree(f);
    for (int d = bit_degree(a); d >= df; d = bit_degree(a))
        a ^= f << (d - df);
    return a;
}

// Carry-less product reduced mod f. Operands must already be reduced, so
// the intermediate product stays below degree 64.
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return gf2_mod(r, f);
}

// x^e mod f by square-and-multiply.
std::uint64_t gf2_pow_x(std::uint64_t e, std::uint64_t f) {
    std::uint64_t result = 1;
    std::uint64_t base = gf2_mod(2, f);  // the polynomial x
    while (e) {
        if (e & 1) result = gf2_mulmod(result, base, f);
        base = gf2_mulmod(base, base, f);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
    if (bits < 2)
        throw std::invalid_argument("Gf2Poly: degree must be at least 1");
    const unsigned deg = static_cast<unsigned>(bit_degree(bits));
    if (deg > kMaxDegree)
        throw std::invalid_argument("Gf2Poly: degree " + std::to_string(deg) +
                                    " exceeds the supported maximum " +
                                    std::to_string(kMaxDegree));
    return Gf2Poly(bits);
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<unsigned>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("Gf2Poly: empty exponent list");
    std::uint64_t bits = 0;
    for (unsigned e : exponents) {
        if (e > kMaxDegree)
            throw std::invalid_argument("Gf2Poly: exponent " + std::to_string(e) +
                                        " exceeds the supported maximum");
        if ((bits >> e) & 1u)
            throw std::invalid_argument("Gf2Poly: duplicate exponent " +
                                        std::to_string(e));
        bits |= std::uint64_t(1) << e;
    }
    return from_bits(bits);
}

Gf2Poly Gf2Poly::parse(const std::string& text) {
    std::vector<unsigned> exponents;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        unsigned long v;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Gf2Poly: bad exponent '" + tok + "'");
        }
        if (used != tok.size() || v > kMaxDegree)
            throw std::invalid_argument("Gf2Poly: bad exponent '" + tok + "'");
        exponents.push_back(static_cast<unsigned>(v));
    }
    if (exponents.empty())
        throw std::invalid_argument("Gf2Poly: empty polynomial '" + text + "'");
    return from_exponents(exponents);
}

unsigned Gf2Poly::degree() const { return static_cast<unsigned>(bit_degree(bits_)); }

std::string Gf2Poly::to_string() const {
    std::string out;
    for (int i = bit_degree(bits_); i >= 0; --i) {
        if (!((bits_ >> i) & 1u)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string Gf2Poly::exponent_list() const {
    std::string out;
    for (int i = bit_degree(bits_); i >= 0; --i) {
        if (!((bits_ >> i) & 1u)) continue;
        if (!out.empty()) out += ",";
        out += std::to_string(i);
    }
    return out;
}

bool is_primitive_poly(const Gf2Poly& poly) {
    const std::uint64_t f = poly.bits();
    if (!(f & 1))
        throw std::invalid_argument("is_primitive_poly: zero constant term");
    const unsigned n = poly.degree();
    const std::uint64_t group_order = (std::uint64_t(1) << n) - 1;
    // x must have order exactly 2^n - 1; a reducible f has fewer units, so
    // this single test also rules reducibility out.
    if (gf2_pow_x(group_order, f) != 1) return false;
    for (std::uint64_t r : prime_factors(group_order)) {
        if (gf2_pow_x(group_order / r, f) == 1) return false;
    }
    return true;
}

Gf2Poly first_primitive_poly(unsigned degree) {
    if (degree < 1 || degree > Gf2Poly::kMaxDegree)
        throw std::invalid_argument("first_primitive_poly: degree out of range");
    const std::uint64_t lead = std::uint64_t(1) << degree;
    for (std::uint64_t bits = lead | 1; bits < (lead << 1); bits += 2) {
        Gf2Poly p = Gf2Poly::from_bits(bits);
        if (is_primitive_poly(p)) return p;
    }
    throw std::logic_error("first_primitive_poly: no primitive polynomial found");
}

BinarySequence msequence(const Gf2Poly& poly) {
    const unsigned n = poly.degree();
    if (n < 2 || n > kMaxMseqDegree)
        throw std::invalid_argument("msequence: degree must be in 2.." +
                                    std::to_string(kMaxMseqDegree));
    if (!is_primitive_poly(poly))
        throw std::invalid_argument("msequence: " + poly.to_string() +
                                    " is not primitive over GF(2)");

    std::vector<unsigned> taps;
    for (unsigned i = 0; i < n; ++i)
        if (poly.coeff(i)) taps.push_back(i);

    const std::size_t period = (std::size_t(1) << n) - 1;
    std::vector<std::uint8_t> bits(period, 0);
    bits[n - 1] = 1;  // initial state (0, ..., 0, 1)
    for (std::size_t t = 0; t + n < period; ++t) {
        unsigned acc = 0;
        for (unsigned i : taps) acc ^= bits[t + i];
        bits[t + n] = static_cast<std::uint8_t>(acc);
    }
    return {std::move(bits), "msequence(" + poly.exponent_list() + ")"};
}

std::size_t weight(const BinarySequence& s) {
    std::size_t w = 0;
    for (std::uint8_t b : s.bits) w += b;
    return w;
}

std::int64_t binary_autocorrelation(const BinarySequence& s, std::size_t tau) {
    const std::size_t n = s.period();
    if (tau >= n)
        throw std::invalid_argument("binary_autocorrelation: shift out of range");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + tau;
        if (j >= n) j -= n;
        sum += (s.bits[i] == s.bits[j]) ? 1 : -1;
    }
    return sum;
}

std::optional<std::size_t> first_non_ideal_shift(const BinarySequence& s) {
    for (std::size_t tau = 1; tau < s.period(); ++tau)
        if (binary_autocorrelation(s, tau) != -1) return tau;
    return std::nullopt;
}

bool is_ideal_autocorrelation_binary(const BinarySequence& s) {
    if (s.period() < 2) return false;
    return !first_non_ideal_shift(s).has_value();
}

}  // namespace qadic
