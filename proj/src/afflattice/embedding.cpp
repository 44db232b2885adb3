#include <stdexcept>

#include "lzb/afflattice.hpp"

namespace lzb {

AffineCoweight map_j(const AffineCoweight& h) {
    const int n = h.rank + 1;
    AffineCoweight r = AffineCoweight::zero(n);
    r.coords[0] = h.coords[0];
    for (int i = 1; i <= n - 1; ++i) r.coords[static_cast<std::size_t>(i)] = h.coords[static_cast<std::size_t>(i)];
    r.coords[static_cast<std::size_t>(n)] = h.coords[0];
    r.coords.back() = h.coords.back();
    return r;
}

AffineWeight map_jstar(const AffineWeight& lam) {
    const int n = lam.rank;
    if (n < 2) throw std::invalid_argument("map_jstar needs rank >= 2");
    AffineWeight r = AffineWeight::zero(n - 1);
    r.coords[0] = lam.coords[0] + lam.coords[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n - 1; ++i) r.coords[static_cast<std::size_t>(i)] = lam.coords[static_cast<std::size_t>(i)];
    r.coords.back() = lam.coords.back();
    return r;
}

std::vector<BigRat> root_coordinates(const AffineWeight& zeta) {
    const int k = zeta.rank;
    std::vector<BigRat> z(static_cast<std::size_t>(k) + 1, BigRat(0));
    z[0] = zeta.delta_coord();  // only alpha_0 carries delta
    // Remaining finite part: solve the finite Cartan system for z_1..z_k.
    AffineWeight rest = zeta - z[0] * AffineWeight::alpha(k, 0);
    std::vector<std::vector<BigRat>> m(static_cast<std::size_t>(k), std::vector<BigRat>(static_cast<std::size_t>(k) + 1));
    for (int r = 1; r <= k; ++r) {
        for (int c = 1; c <= k; ++c) m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = cartan_entry(k, r, c);
        m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k)] = rest.coords[static_cast<std::size_t>(r)];
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        while (sgn(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) == 0) ++piv;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
        auto& prow = m[static_cast<std::size_t>(col)];
        const BigRat p = prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v /= p;
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const BigRat f = row[static_cast<std::size_t>(col)];
            if (sgn(f) == 0) continue;
            for (int c = 0; c <= k; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
        }
    }
    for (int i = 1; i <= k; ++i) z[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
    AffineWeight check = AffineWeight::zero(k);
    for (int i = 0; i <= k; ++i) check += z[static_cast<std::size_t>(i)] * AffineWeight::alpha(k, i);
    if (check != zeta) throw std::invalid_argument("weight is not in the span of the simple roots");
    return z;
}

AffineWeight map_gamma(const AffineWeight& zeta) {
    const int n = zeta.rank + 1;
    const std::vector<BigRat> z = root_coordinates(zeta);
    AffineWeight r = AffineWeight::zero(n);
    r += z[0] * (AffineWeight::alpha(n, 0) + AffineWeight::alpha(n, n));
    for (int i = 1; i <= n - 1; ++i) r += z[static_cast<std::size_t>(i)] * AffineWeight::alpha(n, i);
    return r;
}

std::vector<int> omega(const std::vector<int>& word, int n) {
    std::vector<int> out;
    for (int i : word) {
        if (i < 0 || i > n - 1) throw std::out_of_range("omega: generator index out of range");
        if (i == 0) {
            out.insert(out.end(), {n, 0, n});
        } else {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> w_word(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("w_word index");
    std::vector<int> w;
    for (int j = n; j >= i; --j) w.push_back(j);
    return w;
}

}  // namespace lzb
