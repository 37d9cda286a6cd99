#include "quintic/arith.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace quintic {

namespace {

constexpr std::int64_t kFactorizeCap = 1'000'000'000;

// Odd primes below 1000 plus 2; enough to strip every factor of interest and
// to seed trial division for the residual part.
const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        std::vector<int> out;
        std::array<bool, 1000> composite{};
        for (int i = 2; i < 1000; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (int j = 2 * i; j < 1000; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    std::int64_t last = 1;
    for (const auto& [p, e] : factors_) {
        if (p <= last) throw std::invalid_argument("factorization bases must be strictly increasing");
        if (e < 1) throw std::invalid_argument("factorization exponents must be >= 1");
        if (!is_prime(p)) throw std::invalid_argument("factorization base " + std::to_string(p) + " is not prime");
        last = p;
    }
}

int Factorization::exponent_of(std::int64_t p) const {
    for (const auto& [q, e] : factors_)
        if (q == p) return e;
    return 0;
}

std::int64_t Factorization::value() const {
    std::int64_t n = 1;
    for (const auto& [p, e] : factors_)
        for (int i = 0; i < e; ++i) {
            if (n > std::numeric_limits<std::int64_t>::max() / p)
                throw std::overflow_error("factorization value exceeds 64 bits");
            n *= p;
        }
    return n;
}

Factorization Factorization::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty factored string");
    std::vector<PrimePower> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('*', pos);
        std::string_view token = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        std::int64_t base = 0;
        int exp = 1;
        std::size_t caret = token.find('^');
        std::string_view base_str = token.substr(0, caret);
        auto parse_int = [&token](std::string_view s, auto& out) {
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw std::invalid_argument("malformed factored string near '" + std::string(token) + "'");
        };
        parse_int(base_str, base);
        if (caret != std::string_view::npos) parse_int(token.substr(caret + 1), exp);
        parts.push_back({base, exp});
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    std::sort(parts.begin(), parts.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization(std::move(parts));  // validates distinctness and primality
}

namespace {

std::string render(const Factorization& f, bool five_first) {
    std::string out;
    auto append = [&out](const PrimePower& pp) {
        if (!out.empty()) out += '*';
        out += std::to_string(pp.prime);
        if (pp.exponent != 1) {
            out += '^';
            out += std::to_string(pp.exponent);
        }
    };
    if (five_first) {
        for (const auto& pp : f.factors())
            if (pp.prime == 5) append(pp);
    }
    for (const auto& pp : f.factors())
        if (!(five_first && pp.prime == 5)) append(pp);
    if (out.empty()) out = "1";
    return out;
}

}  // namespace

std::string to_string(const Factorization& f) { return render(f, false); }
std::string to_conductor_string(const Factorization& f) { return render(f, true); }

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n > kFactorizeCap * kFactorizeCap)
        throw std::invalid_argument("primality input exceeds supported range");
    for (int p : small_primes()) {
        if (static_cast<std::int64_t>(p) * p > n) return true;
        if (n % p == 0) return n == p;
    }
    // No factor below 1000; continue on the 6k+-1 wheel.
    for (std::int64_t d = 1009; d * d <= n; d += 6) {
        if (n % (d - 2) == 0 || n % d == 0) return false;
    }
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("factorize requires n >= 2");
    if (n > kFactorizeCap) throw std::invalid_argument("factorize refuses n > 10^9");
    std::vector<PrimePower> out;
    auto strip = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    for (int p : small_primes()) {
        if (static_cast<std::int64_t>(p) * p > n) break;
        strip(p);
    }
    if (n >= 1000 * 1000) {
        for (std::int64_t d = 1009; d * d <= n; d += 6) {
            strip(d - 2);
            strip(d);
        }
    }
    if (n > 1) out.push_back({n, 1});  // residual prime
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization(std::move(out));
}

ResidueClass residue_class(std::int64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("residue_class requires a prime");
    return ResidueClass{q, static_cast<int>(q % 5), static_cast<int>(q % 25)};
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow requires exp >= 0");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
            throw std::overflow_error("checked_pow overflow");
        r *= base;
    }
    return r;
}

}  // namespace quintic
