#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qadic/constructions.hpp"

namespace qadic {

/// Exact complex integer a + bi; the value domain for quaternary
/// autocorrelation with zeta_4 = i.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    GaussianInt& operator+=(GaussianInt o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt conj() const { return {re, -im}; }

    friend auto operator<=>(const GaussianInt&, const GaussianInt&) = default;
};

/// All N shift values plus their multiset of occurrences.
struct AutocorrProfile {
    std::size_t period = 0;
    std::vector<GaussianInt> values;                    // index = shift
    std::map<GaussianInt, std::int64_t> distribution;   // value -> count
};

/// C_s(tau) = sum_{i=0}^{N-1} i^{(s_i - s_{i+tau}) mod 4}, computed in
/// exact Gaussian-integer arithmetic. C_s(0) = N.
GaussianInt autocorrelation(const QuaternarySequence& s, std::size_t tau);

AutocorrProfile full_profile(const QuaternarySequence& s);

/// True iff the profile is the ideal one for a balanced quaternary
/// sequence of even period: peak N once and, off peak, 0 at N/2 shifts and
/// -2 at the remaining N/2 - 1, all values real. (Equivalently: maximal
/// out-of-phase magnitude 2 with the minimal number of occurrences.)
bool is_ideal_quaternary(const AutocorrProfile& profile);

struct BalanceResult {
    bool balanced = false;
    std::vector<std::int64_t> counts;  // counts[k] = occurrences of symbol k
};

/// Symbol counts over one period; balanced means every pairwise difference
/// is at most 1. Throws if a digit falls outside {0, ..., alphabet-1}.
BalanceResult is_balanced(std::span<const std::uint8_t> digits, unsigned alphabet);

/// {"period": N, "distribution": [{"re":..,"im":..,"count":..}, ...]},
/// entries ordered by (re, im).
std::string to_json_string(const AutocorrProfile& profile);

}  // namespace qadic
