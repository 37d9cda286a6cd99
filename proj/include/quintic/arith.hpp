#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quintic {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime factorization with strictly increasing primes and exponents >= 1.
/// The empty factorization represents 1.
class Factorization {
public:
    Factorization() = default;

    /// Validates ordering, exponents and primality of every base.
    explicit Factorization(std::vector<PrimePower> factors);

    /// Parses a factored string such as "5^2*2^4*11^4" or "2*3*7".
    /// Bases may appear in any order; the result is stored canonically.
    static Factorization parse(std::string_view text);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    /// Exponent of `p`, 0 when `p` does not occur.
    int exponent_of(std::int64_t p) const;
    bool contains(std::int64_t p) const { return exponent_of(p) > 0; }

    /// Reconstructed integer. Throws std::overflow_error when the product
    /// does not fit in 64 bits (discriminants routinely do not).
    std::int64_t value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// Ascending-base rendering, e.g. "2^4*3".
std::string to_string(const Factorization& f);

/// Rendering with the 5-part first, the customary order for conductors and
/// discriminants of quintic fields, e.g. "5^2*2^4*11^4".
std::string to_conductor_string(const Factorization& f);

/// Deterministic trial division. Accepts 2 <= n <= 10^9 and refuses anything
/// larger rather than degrading silently.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// Residues of a prime modulo 5 and 25, bundled with the four predicates the
/// quintic classification keeps asking for.
struct ResidueClass {
    std::int64_t prime = 0;
    int mod5 = 0;   // prime mod 5, in [0, 5)
    int mod25 = 0;  // prime mod 25, in [0, 25)

    bool is_five() const { return prime == 5; }
    bool plus_one_mod5() const { return mod5 == 1; }
    bool minus_one_mod5() const { return mod5 == 4; }
    /// Splits in the real quadratic field of conductor 5 (q = +-1 mod 5).
    bool split_mod5() const { return mod5 == 1 || mod5 == 4; }
    bool pm_two_mod5() const { return mod5 == 2 || mod5 == 3; }
    /// "Free" prime: q = +-1 or +-7 (mod 25); these never force the 5-part
    /// of the conductor.
    bool free_mod25() const {
        return mod25 == 1 || mod25 == 7 || mod25 == 18 || mod25 == 24;
    }
};

ResidueClass residue_class(std::int64_t q);

/// base^exp with overflow checking.
std::int64_t checked_pow(std::int64_t base, int exp);

}  // namespace quintic
