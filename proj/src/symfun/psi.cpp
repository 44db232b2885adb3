#include <map>
#include <stdexcept>

#include "lzb/symfun.hpp"

namespace lzb {

namespace {

// Multiset of factors (1 - q^k t^e), keyed by (k, e).
using FactorCount = std::map<std::pair<int, int>, int>;

// f(q^a t^b) / f(q^c t^b) with f(z) = (zt)_inf / (zq)_inf, telescoped.
void add_f_ratio(int a, int c, int b, FactorCount& num, FactorCount& den) {
    if (a <= c) {
        for (int k = a; k <= c - 1; ++k) ++num[{k, b + 1}];
        for (int k = a + 1; k <= c; ++k) ++den[{k, b}];
    } else {
        for (int k = c + 1; k <= a; ++k) ++num[{k, b}];
        for (int k = c; k <= a - 1; ++k) ++den[{k, b + 1}];
    }
}

}  // namespace

RatFuncQT psi_coefficient(const Partition& outer, const Partition& inner) {
    if (!is_horizontal_strip(outer, inner)) throw std::invalid_argument("psi needs a horizontal strip");
    const Partition& lam = outer;
    const Partition& mu = inner;
    FactorCount num, den;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = i; j <= mu.length(); ++j) {
            const int b = j - i;
            add_f_ratio(mu.part(i) - mu.part(j), lam.part(i) - mu.part(j), b, num, den);
            add_f_ratio(lam.part(i) - lam.part(j + 1), mu.part(i) - lam.part(j + 1), b, num, den);
        }
    for (auto& [key, m] : num) {
        auto it = den.find(key);
        if (it == den.end()) continue;
        const int common = std::min(m, it->second);
        m -= common;
        it->second -= common;
    }
    int sign_count = 0;
    PolyQT n(1);
    for (const auto& [key, m] : num)
        for (int r = 0; r < m; ++r) {
            n = n * (PolyQT(1) - PolyQT::monomial(1, key.first, key.second));
        }
    RatFuncQT::Binomials bins;
    for (const auto& [key, m] : den)
        if (m > 0) {
            bins[key] = m;
            sign_count += m;  // 1 - z = -(z - 1)
        }
    if (sign_count % 2) n = -n;
    return RatFuncQT(n, bins);
}

LaurentQ psi_at_t0(const Partition& outer, const Partition& inner) {
    if (!is_horizontal_strip(outer, inner)) throw std::invalid_argument("psi needs a horizontal strip");
    LaurentQ r(1);
    for (int i = 1; i <= outer.length(); ++i)
        r *= q_binomial(outer.part(i) - outer.part(i + 1), outer.part(i) - inner.part(i));
    return r;
}

}  // namespace lzb
