#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qadic/gf2seq.hpp"
#include "qadic/numtheory.hpp"

namespace qadic {

enum class Family { g1, g2, g3, external };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One period of a sequence over {0,1,2,3}.
struct QuaternarySequence {
    std::vector<std::uint8_t> digits;
    Family family = Family::external;
    std::uint64_t param = 0;  // p for g1/g2, n for g3, 0 for external

    std::size_t period() const { return digits.size(); }
};

/// Gray mapping of a bit pair to a quaternary digit:
/// (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3.
std::uint8_t gray_map(unsigned a, unsigned e);

/// The two Legendre sequences of period p. b_t = 1 exactly on the
/// non-residues; c agrees with b except c_0 = 1 (b_0 = 0).
struct LegendrePair {
    BinarySequence b;
    BinarySequence c;
};
LegendrePair legendre_sequences(OddPrime p);

/// Period-2p family for p = 1 (mod 4): even positions carry
/// gray_map(b_t, b_t), odd positions gray_map(c_t, 1 - c_t), with b and c
/// indexed mod p.
QuaternarySequence build_g1(OddPrime p);

/// Period-2p family for p = 3 (mod 4): position t carries
/// gray_map(b_t, c_t) for even t and gray_map(b_t, 1 - c_t) for odd t.
QuaternarySequence build_g2(OddPrime p);

/// CRT coordinates of h in Z_{2(2^n-1)} ~ Z_2 x Z_{2^n-1}:
/// h -> (h mod 2, h mod 2^n-1). Requires 0 <= h < 2(2^n-1).
std::pair<unsigned, std::uint64_t> crt_index(std::uint64_t h, unsigned n);

/// Period-2(2^n-1) family built on a binary sequence s of period 2^n-1
/// that has ideal autocorrelation and weight 2^{n-1}. With
/// (eps, r) = crt_index(t, n): u_t = s_r and v_t = s_r for even t,
/// 1 - s_r for odd t; the digit is gray_map(u_t, v_t). The preconditions
/// on s are validated; the autocorrelation error names the violating shift.
QuaternarySequence build_g3(const BinarySequence& s);

}  // namespace qadic
