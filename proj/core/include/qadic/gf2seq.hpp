#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qadic {

/// Polynomial over GF(2), bit i of the mask = coefficient of x^i.
/// Degree 1..32, so products of two remainders always fit in 64 bits.
class Gf2Poly {
public:
    static constexpr unsigned kMaxDegree = 32;

    static Gf2Poly from_bits(std::uint64_t bits);
    static Gf2Poly from_exponents(const std::vector<unsigned>& exponents);
    /// Parses the comma-separated exponent form used on the command line,
    /// e.g. "4,1,0" for x^4 + x + 1.
    static Gf2Poly parse(const std::string& text);

    unsigned degree() const;
    bool coeff(unsigned i) const { return (bits_ >> i) & 1u; }
    std::uint64_t bits() const { return bits_; }

    std::string to_string() const;        // "x^4 + x + 1"
    std::string exponent_list() const;    // "4,1,0"

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

private:
    explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_;
};

/// One period of a binary sequence.
struct BinarySequence {
    std::vector<std::uint8_t> bits;
    std::string provenance;  // e.g. "msequence(4,1,0)" or "file:seq.txt"

    std::size_t period() const { return bits.size(); }
};

/// True iff poly is primitive over GF(2): x generates the full group of
/// order 2^n - 1 in GF(2)[x]/(poly). Checked by the multiplicative order
/// test (x^{2^n-1} = 1 and x^{(2^n-1)/r} != 1 for every prime r | 2^n-1);
/// a reducible modulus cannot pass it. Rejects a zero constant term.
bool is_primitive_poly(const Gf2Poly& poly);

/// First primitive polynomial of the given degree in ascending order of
/// the coefficient mask. Deterministic, so generated sequences are
/// reproducible run to run.
Gf2Poly first_primitive_poly(unsigned degree);

/// One period (2^n - 1 bits) of the Fibonacci LFSR output for a primitive
/// polynomial x^n + sum c_i x^i: recurrence s_{t+n} = sum_i c_i s_{t+i}
/// over GF(2), initial state fixed to (0, ..., 0, 1). Degree 2..24.
BinarySequence msequence(const Gf2Poly& poly);

/// Number of 1-bits in one period.
std::size_t weight(const BinarySequence& s);

/// Periodic +-1 autocorrelation sum_i (-1)^{s_i - s_{i+tau}}.
std::int64_t binary_autocorrelation(const BinarySequence& s, std::size_t tau);

/// Smallest shift 0 < tau < N with autocorrelation != -1, if any.
std::optional<std::size_t> first_non_ideal_shift(const BinarySequence& s);

/// True iff every out-of-phase autocorrelation equals -1.
bool is_ideal_autocorrelation_binary(const BinarySequence& s);

}  // namespace qadic
