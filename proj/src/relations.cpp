#include "quintic/relations.hpp"

#include <numeric>
#include <stdexcept>

namespace quintic {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int walter_predict_vn(int p, int v_l, int e) {
    if (p != 3 && p != 5) throw std::invalid_argument("relation exposed for p in {3, 5}");
    if (v_l < 0) throw std::invalid_argument("class number valuation must be >= 0");
    int max_e = (p - 1) * (p - 2) / 2;
    if (e < 0 || e > max_e) throw std::invalid_argument("unit index exponent out of range");
    int r = (p * p - 5) / 4;
    int v_n = (p - 1) * v_l + e - r;
    if (v_n < 0) throw std::invalid_argument("inconsistent inputs: predicted valuation negative");
    return v_n;
}

int parry_predict_vn(int v_l, int e) { return walter_predict_vn(5, v_l, e); }

int kobayashi_q_plus(int v_l, int v_m) {
    if (v_l < 0 || v_m < 0) throw std::invalid_argument("class number valuations must be >= 0");
    if ((v_l == 0) != (v_m == 0))
        throw std::invalid_argument("5 | h_L <=> 5 | h_M violated");
    int q_plus = v_m - 2 * v_l + 2;
    if (q_plus < 0 || q_plus > 2)
        throw std::invalid_argument("Kobayashi determinant exponent out of {0, 1, 2}");
    return q_plus;
}

bool scholz_check(int v_l, int v_n, int q) {
    if (v_l < 0 || v_n < 0) throw std::invalid_argument("class number valuations must be >= 0");
    if (q != 0 && q != 1) throw std::invalid_argument("Scholz unit index exponent must be 0 or 1");
    return v_n == 2 * v_l + q - 1 && (v_l == 0) == (v_n == 0);
}

std::vector<int> free_residues_mod25() {
    std::vector<int> out;
    for (int a = 1; a < 25; ++a) {
        if (a % 5 == 0) continue;  // not invertible
        int r5 = a % 25;
        if (r5 == 1 || r5 == 24 || r5 == 7 || r5 == 18) out.push_back(a);
    }
    return out;
}

Rational zeta_norm_density(int t) {
    if (t < 1) throw std::invalid_argument("zeta_norm_density requires t >= 1");
    if (t > 26) throw std::invalid_argument("denominator would overflow 64 bits");
    int unit_count = 0;
    for (int a = 1; a < 25; ++a)
        if (a % 5 != 0) ++unit_count;
    Rational per_prime = make_rational(static_cast<std::int64_t>(free_residues_mod25().size()),
                                       unit_count);
    Rational out = make_rational(1, 1);
    for (int i = 0; i < t; ++i) out = make_rational(out.num * per_prime.num, out.den * per_prime.den);
    return out;
}

}  // namespace quintic
