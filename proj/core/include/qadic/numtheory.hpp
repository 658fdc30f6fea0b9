#pragma once

#include <cstdint>
#include <set>

#include <gmpxx.h>

namespace qadic {

/// Deterministic primality test by trial division. Accepts any n < 10^12
/// (enough for every sweep this library runs); larger inputs are rejected
/// so the runtime stays bounded.
bool is_prime(std::uint64_t n);

/// A validated odd prime. Construction throws std::invalid_argument for
/// anything else, so downstream code can take primality for granted.
class OddPrime {
public:
    explicit OddPrime(std::uint64_t value);
    std::uint64_t value() const { return value_; }

private:
    std::uint64_t value_;
};

/// Legendre symbol (a/p) via Euler's criterion: +1 for a nonzero square
/// mod p, -1 for a nonzero non-square, 0 when p | a. Negative a is reduced
/// into [0, p) first.
int legendre_symbol(std::int64_t a, OddPrime p);

/// The set of quadratic residues in {1, ..., p-1}; always (p-1)/2 elements.
std::set<std::uint64_t> quadratic_residues(OddPrime p);

/// (sum_{i=1}^{p-1} (i/p) 4^i)^2  ==  -(-1/p)(4^p-1)/3 + (-1/p) p   (mod 4^p-1)
///
/// Evaluates both sides exactly and reports the canonical residues so a
/// failure would be inspectable.
struct Lemma2Result {
    bool holds;
    mpz_class lhs;  // canonical residue in [0, 4^p-1)
    mpz_class rhs;
};
Lemma2Result check_lemma2(OddPrime p);

/// 25 | (4^p + 1) happens for a prime p exactly when p = 5. Returns true
/// when that equivalence holds at p (i.e. the identity is confirmed).
bool check_lemma3(std::uint64_t p);

/// T = sum_{t=1}^{p-1} (2t/p) 4^{2t} + sum_{t=0, t != (p-1)/2}^{p-1} ((2t+1)/p) 4^{2t+1}
/// satisfies T == 2 sum_{t=1}^{p-1} (t/p) 4^t (mod 4^p-1) and T == 0 (mod 4^p+1).
/// Legendre indices are reduced mod p before evaluation. The two witness
/// residues of T are returned alongside the verdict.
struct Lemma4Result {
    bool holds;
    mpz_class mod_minus;  // T mod (4^p - 1)
    mpz_class mod_plus;   // T mod (4^p + 1), 0 when the identity holds
};
Lemma4Result check_lemma4(OddPrime p);

}  // namespace qadic
