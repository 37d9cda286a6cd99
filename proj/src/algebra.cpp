#include "quintic/algebra.hpp"

#include <stdexcept>

namespace quintic {

namespace {

int mod(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

int mod_pow(int base, int exp, int m) {
    int r = 1;
    base = mod(base, m);
    for (int i = 0; i < exp; ++i) r = (r * base) % m;
    return r;
}

void check_element(const GroupRingElement& x) {
    if (x.p != 3 && x.p != 5) throw std::invalid_argument("group ring defined for p in {3, 5}");
    std::size_t order = (x.p == 5) ? 4 : 2;
    if (x.coeffs.size() != order)
        throw std::invalid_argument("coefficient count must equal the group order");
}

}  // namespace

GroupRingElement ring_identity(int p, int order) {
    GroupRingElement e{p, std::vector<int>(static_cast<std::size_t>(order), 0)};
    e.coeffs[0] = 1;
    check_element(e);
    return e;
}

std::vector<GroupRingElement> idempotents(int p) {
    if (p != 3 && p != 5) throw std::invalid_argument("idempotents defined for p in {3, 5}");
    // Character values land in U(Z/pZ): the generator of the root-of-unity
    // group goes to 3 (p = 5) resp. 2 (p = 3), and 1/order is -1 mod p.
    int order = (p == 5) ? 4 : 2;
    int root = (p == 5) ? 3 : 2;
    int inv_order = p - 1;  // 1/4 = 4 mod 5, 1/2 = 2 mod 3
    std::vector<GroupRingElement> out;
    for (int j = 0; j < order; ++j) {
        GroupRingElement psi{p, std::vector<int>(static_cast<std::size_t>(order), 0)};
        for (int k = 0; k < order; ++k) {
            // chi_j(tau^{-k}) = root^{-jk mod order}
            int chi = mod_pow(root, mod(-j * k, order), p);
            psi.coeffs[static_cast<std::size_t>(k)] = (inv_order * chi) % p;
        }
        out.push_back(std::move(psi));
    }
    return out;
}

GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
    check_element(x);
    check_element(y);
    if (x.p != y.p) throw std::invalid_argument("group ring factors must share p");
    std::size_t order = x.coeffs.size();
    GroupRingElement z{x.p, std::vector<int>(order, 0)};
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            std::size_t k = (i + j) % order;
            z.coeffs[k] = (z.coeffs[k] + x.coeffs[i] * y.coeffs[j]) % x.p;
        }
    return z;
}

ExponentVector make_exponent_vector(int a, int b, int c, int d) {
    return ExponentVector{{mod(a, 5), mod(b, 5), mod(c, 5), mod(d, 5)}};
}

ExponentVector tau_act(const ExponentVector& v) {
    return ExponentVector{{v.e[3], v.e[0], v.e[1], v.e[2]}};
}

std::array<int, 2> tau_act(const std::array<int, 2>& v) { return {v[1], v[0]}; }

std::optional<int> is_scalar_multiple(const ExponentVector& v, const ExponentVector& w) {
    if (v.is_zero()) return w.is_zero() ? std::optional<int>(1) : std::nullopt;
    for (int lambda = 1; lambda < 5; ++lambda) {
        bool match = true;
        for (int i = 0; i < 4; ++i)
            if (mod(lambda * v.e[static_cast<std::size_t>(i)], 5) != w.e[static_cast<std::size_t>(i)]) {
                match = false;
                break;
            }
        if (match) return lambda;
    }
    return std::nullopt;
}

std::array<int, 2> norm_project_nm(const ExponentVector& v) {
    return {mod(v.e[0] + v.e[2], 5), mod(v.e[1] + v.e[3], 5)};
}

int norm_project_ml(const std::array<int, 2>& v) { return mod(v[0] + v[1], 5); }

int norm_project_nl(const ExponentVector& v) {
    return mod(v.e[0] + v.e[1] + v.e[2] + v.e[3], 5);
}

bool in_norm_kernel_nm(const ExponentVector& v) {
    auto pr = norm_project_nm(v);
    return pr[0] == 0 && pr[1] == 0;
}

AmbiguousDimensions ambiguous_dimensions(const FieldInvariants& inv) {
    return AmbiguousDimensions{inv.T, inv.s2 + inv.s4, 2 * inv.s4};
}

bool invariant_line_check(const ExponentVector& v) {
    if (v.is_zero()) throw std::invalid_argument("invariant_line_check rejects the zero vector");
    return is_scalar_multiple(v, tau_act(v)).has_value();
}

}  // namespace quintic
