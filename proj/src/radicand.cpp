#include "quintic/radicand.hpp"

#include <cassert>
#include <stdexcept>

namespace quintic {

Radicand make_radicand(std::int64_t value, int p) {
    if (value < 2) throw std::invalid_argument("radicand must be >= 2");
    return make_radicand(factorize(value), p);
}

Radicand make_radicand(const Factorization& factorization, int p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("radicand degree must be an odd prime");
    std::vector<PrimePower> reduced;
    for (const auto& [q, e] : factorization.factors()) {
        int r = e % p;
        if (r > 0) reduced.push_back({q, r});
    }
    if (reduced.empty())
        throw std::invalid_argument("radicand is a perfect " + std::to_string(p) + "th power");
    Factorization f{std::move(reduced)};
    return Radicand{f.value(), std::move(f), p};
}

std::vector<std::int64_t> homogeneous_components(const Radicand& d) {
    std::vector<std::int64_t> comp(static_cast<std::size_t>(d.p - 1), 1);
    for (const auto& [q, e] : d.factorization.factors()) comp[static_cast<std::size_t>(e - 1)] *= q;
    return comp;
}

std::vector<std::int64_t> coradicands(const Radicand& d) {
    std::vector<std::int64_t> orbit;
    orbit.reserve(static_cast<std::size_t>(d.p - 1));
    for (int k = 1; k < d.p; ++k) {
        std::int64_t v = 1;
        for (const auto& [q, e] : d.factorization.factors()) {
            int r = (e * k) % d.p;  // never 0: p is prime and p divides neither e nor k
            v *= checked_pow(q, r);
        }
        orbit.push_back(v);
    }
    return orbit;
}

NormalizedRadicand normalize(const Radicand& d) {
    std::vector<std::int64_t> orbit = coradicands(d);
    int best = 0;
    for (int k = 1; k < static_cast<int>(orbit.size()); ++k) {
        assert(orbit[static_cast<std::size_t>(k)] != orbit[static_cast<std::size_t>(best)]);
        if (orbit[static_cast<std::size_t>(k)] < orbit[static_cast<std::size_t>(best)]) best = k;
    }
    if (best == 0) return {d, 1};
    return {make_radicand(orbit[static_cast<std::size_t>(best)], d.p), best + 1};
}

bool is_normalized(const Radicand& d) {
    std::vector<std::int64_t> orbit = coradicands(d);
    for (std::size_t k = 1; k < orbit.size(); ++k)
        if (orbit[k] < orbit[0]) return false;
    return true;
}

std::vector<Radicand> enumerate_normalized(std::int64_t limit, int p) {
    if (limit < 2) throw std::invalid_argument("enumerate_normalized requires limit >= 2");
    std::vector<Radicand> out;
    for (std::int64_t n = 2; n < limit; ++n) {
        Factorization f = factorize(n);
        bool power_free = true;
        for (const auto& [q, e] : f.factors())
            if (e >= p) {
                power_free = false;
                break;
            }
        if (!power_free) continue;
        Radicand d{n, std::move(f), p};
        if (is_normalized(d)) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace quintic
