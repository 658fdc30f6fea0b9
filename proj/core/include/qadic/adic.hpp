#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qadic/constructions.hpp"

namespace qadic {

/// S(4) = sum_i s_i 4^i as an exact integer.
mpz_class s4_value(const QuaternarySequence& s);

/// S(4) mod modulus by Horner evaluation; never materializes S(4) itself,
/// so reductions stay cheap even when only residues are wanted.
mpz_class sequence_residue(const QuaternarySequence& s, const mpz_class& modulus);

/// Everything the 4-adic complexity of a sequence comes down to.
/// g = gcd(4^N - 1, S(4)) with gcd(m, 0) = m, q = (4^N - 1)/g; the
/// complexity is log_4 q (reported as a 30-significant-digit decimal) and
/// the smallest FCSR generating the sequence has length floor(log_4(q+1)).
/// threshold_ok is the exact-integer form of log_4 q > (N-16)/6, i.e.
/// q^6 > 4^{N-16}, trivially satisfied for N <= 16.
struct AdicReport {
    std::size_t period = 0;
    mpz_class s4;
    mpz_class modulus;   // 4^N - 1
    mpz_class gcd;
    mpz_class quotient;  // (4^N - 1) / gcd
    std::string phi4_log4;
    std::uint64_t fcsr_length = 0;
    bool threshold_ok = false;
};
AdicReport complexity_report(const QuaternarySequence& s);

/// For even N = 2m, the two coprime factors of the gcd:
/// gcd(S(4), 4^m - 1) and gcd(S(4), 4^m + 1). Their product equals
/// gcd(S(4), 4^N - 1) since 4^m -+ 1 are odd and differ by 2.
struct GcdSplit {
    mpz_class minus_part;
    mpz_class plus_part;
};
GcdSplit gcd_split(const QuaternarySequence& s);

/// Closed-form gcd(4^N - 1, S(4)) for a constructed family:
///   g1: 15 if 5 | (p+2), else 3   (split 3 x {5 or 1})
///   g2:  5 if 5 | (p-2), else 1   (split 1 x {5 or 1})
///   g3: (4^{2^n-1} + 1)/5         (split 1 x that factor)
struct TheoremPrediction {
    Family family = Family::external;
    std::uint64_t param = 0;
    mpz_class predicted_gcd;
    mpz_class predicted_minus;
    mpz_class predicted_plus;
    std::string branch;  // which case fired, e.g. "5|(p+2)" or "else"
};
TheoremPrediction predict_gcd(Family family, std::uint64_t param);

/// Builds the sequence (g3 uses the default m-sequence of degree n),
/// computes the actual gcd and its split, and compares against the
/// closed form. pass iff computed == predicted.
struct VerifyResult {
    Family family = Family::external;
    std::uint64_t param = 0;
    std::size_t period = 0;
    mpz_class predicted_gcd;
    mpz_class computed_gcd;
    mpz_class gcd_minus;
    mpz_class gcd_plus;
    std::string branch;
    bool pass = false;
};
VerifyResult verify_theorem(Family family, std::uint64_t param);

/// {"period":N, "s4":"...", "gcd":"...", "quotient":"...",
///  "phi4_log4":"...", "fcsr_length":"...", "threshold_ok":bool};
/// big integers as decimal strings.
std::string to_json_string(const AdicReport& report);

}  // namespace qadic
