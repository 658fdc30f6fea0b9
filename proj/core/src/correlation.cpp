#include "qadic/correlation.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qadic {

GaussianInt autocorrelation(const QuaternarySequence& s, std::size_t tau) {
    const std::size_t n = s.period();
    if (tau >= n)
        throw std::invalid_argument("autocorrelation: shift out of range");
    // powers of i: i^0, i^1, i^2, i^3
    static constexpr std::int64_t kRe[4] = {1, 0, -1, 0};
    static constexpr std::int64_t kIm[4] = {0, 1, 0, -1};
    GaussianInt sum;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + tau;
        if (j >= n) j -= n;
        const unsigned k = (s.digits[i] + 4u - s.digits[j]) & 3u;
        sum.re += kRe[k];
        sum.im += kIm[k];
    }
    return sum;
}

AutocorrProfile full_profile(const QuaternarySequence& s) {
    AutocorrProfile profile;
    profile.period = s.period();
    profile.values.reserve(s.period());
    for (std::size_t tau = 0; tau < s.period(); ++tau) {
        const GaussianInt v = autocorrelation(s, tau);
        profile.values.push_back(v);
        ++profile.distribution[v];
    }
    return profile;
}

bool is_ideal_quaternary(const AutocorrProfile& profile) {
    const std::size_t n = profile.period;
    if (n < 2 || n % 2 != 0) return false;
    std::map<GaussianInt, std::int64_t> want;
    want[{static_cast<std::int64_t>(n), 0}] = 1;
    want[{0, 0}] = static_cast<std::int64_t>(n / 2);
    if (n / 2 > 1) want[{-2, 0}] = static_cast<std::int64_t>(n / 2 - 1);
    return profile.distribution == want;
}

BalanceResult is_balanced(std::span<const std::uint8_t> digits, unsigned alphabet) {
    if (alphabet < 2)
        throw std::invalid_argument("is_balanced: alphabet size must be >= 2");
    BalanceResult result;
    result.counts.assign(alphabet, 0);
    for (std::uint8_t d : digits) {
        if (d >= alphabet)
            throw std::invalid_argument("is_balanced: digit " + std::to_string(d) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet));
        ++result.counts[d];
    }
    std::int64_t lo = result.counts[0], hi = result.counts[0];
    for (std::int64_t c : result.counts) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    result.balanced = (hi - lo) <= 1;
    return result;
}

std::string to_json_string(const AutocorrProfile& profile) {
    nlohmann::ordered_json j;
    j["period"] = profile.period;
    auto& dist = j["distribution"] = nlohmann::ordered_json::array();
    for (const auto& [value, count] : profile.distribution) {
        dist.push_back({{"re", value.re}, {"im", value.im}, {"count", count}});
    }
    return j.dump();
}

}  // namespace qadic
