#include <sstream>

#include "lzb/qrep.hpp"

namespace lzb {

namespace {

bool has(std::uint32_t mask, int a) { return (mask >> (a - 1)) & 1U; }

}  // namespace

TensorSpace::TensorSpace(int n1_, std::vector<int> signature_, int K_)
    : n1(n1_), signature(std::move(signature_)), K(K_) {
    if (n1 < 2 || n1 > 16) throw std::invalid_argument("n1 must lie in 2..16");
    if (K < 0 || K > 60) throw std::invalid_argument("K must lie in 0..60");
    for (int i : signature)
        if (i < 1 || i > n1 - 1) throw std::invalid_argument("fundamental index out of range");
}

TensorSpace TensorSpace::for_weight(const LevelZeroDominant& lam, int K) {
    std::vector<int> sig;
    for (int i = 1; i <= lam.rank; ++i)
        for (int c = 0; c < lam.m[static_cast<std::size_t>(i - 1)]; ++c) sig.push_back(i);
    return TensorSpace(lam.rank + 1, std::move(sig), K);
}

std::uint32_t subset_mask(const std::vector<int>& S) {
    std::uint32_t m = 0;
    for (int a : S) {
        if (a < 1 || a > 31) throw std::invalid_argument("subset element out of range");
        m |= 1U << (a - 1);
    }
    return m;
}

std::vector<int> mask_subset(std::uint32_t mask) {
    std::vector<int> S;
    for (int a = 1; mask != 0; ++a, mask >>= 1)
        if (mask & 1U) S.push_back(a);
    return S;
}

FactorState extremal_factor(int i, int k) { return FactorState{(1U << i) - 1U, k}; }

int factor_pairing(int n1, int j, const FactorState& s) {
    if (j == 0) return static_cast<int>(has(s.mask, n1)) - static_cast<int>(has(s.mask, 1));
    return static_cast<int>(has(s.mask, j)) - static_cast<int>(has(s.mask, j + 1));
}

int state_pairing(int n1, int j, const TensorState& s) {
    int a = 0;
    for (const auto& f : s) a += factor_pairing(n1, j, f);
    return a;
}

int state_degree(const TensorState& s) {
    int k = 0;
    for (const auto& f : s) k += f.k;
    return k;
}

AffineWeight state_weight(int n1, const TensorState& s) {
    AffineWeight w = AffineWeight::zero(n1 - 1);
    for (int j = 0; j < n1; ++j) w.coords[static_cast<std::size_t>(j)] = state_pairing(n1, j, s);
    w.coords.back() = state_degree(s);
    return w;
}

std::string state_id(const TensorState& s) {
    std::string out;
    for (const auto& f : s) {
        out += '[';
        const auto S = mask_subset(f.mask);
        for (std::size_t a = 0; a < S.size(); ++a) out += (a ? "," : "") + std::to_string(S[a]);
        out += '|' + std::to_string(f.k) + ']';
    }
    return out;
}

std::vector<TensorState> basis_states(const TensorSpace& space, int margin) {
    const int kmax = space.K - margin;
    std::vector<TensorState> out;
    if (kmax < 0) return out;
    // Per-factor lists in increasing (mask, k) order; the product is then in lexicographic order.
    std::vector<std::vector<FactorState>> lists;
    for (int i : space.signature) {
        std::vector<FactorState> l;
        for (std::uint32_t m = 0; m < (1U << space.n1); ++m) {
            if (__builtin_popcount(m) != i) continue;
            for (int k = -kmax; k <= kmax; ++k) l.push_back({m, k});
        }
        lists.push_back(std::move(l));
    }
    std::vector<std::size_t> idx(lists.size(), 0);
    while (true) {
        TensorState s;
        for (std::size_t p = 0; p < lists.size(); ++p) s.push_back(lists[p][idx[p]]);
        out.push_back(std::move(s));
        std::size_t p = lists.size();
        while (p > 0) {
            --p;
            if (++idx[p] < lists[p].size()) break;
            idx[p] = 0;
            if (p == 0) return out;
        }
        if (lists.empty()) return out;
    }
}

TensorVector::TensorVector(TensorSpace space) : space_(std::move(space)) {}

TensorVector TensorVector::basis(const TensorSpace& space, const TensorState& s) {
    if (s.size() != space.size()) throw std::invalid_argument("state length does not match the signature");
    for (std::size_t p = 0; p < s.size(); ++p)
        if (__builtin_popcount(s[p].mask) != space.signature[p] || s[p].mask >= (1U << space.n1))
            throw std::invalid_argument("state does not match the signature");
    TensorVector v(space);
    v.add(s, LaurentQ(1));
    return v;
}

TensorVector TensorVector::extremal(const TensorSpace& space) {
    TensorState s;
    for (int i : space.signature) s.push_back(extremal_factor(i));
    return basis(space, s);
}

LaurentQ TensorVector::coeff(const TensorState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? LaurentQ() : it->second;
}

void TensorVector::add(const TensorState& s, const LaurentQ& c) {
    if (c.is_zero()) return;
    for (const auto& f : s)
        if (f.k > space_.K || f.k < -space_.K)
            throw TruncationError("z-degree " + std::to_string(f.k) + " leaves [-" + std::to_string(space_.K) + ", " +
                                  std::to_string(space_.K) + "] at " + state_id(s));
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (!(o.space_ == space_)) throw std::invalid_argument("adding vectors of different spaces");
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (!(o.space_ == space_)) throw std::invalid_argument("subtracting vectors of different spaces");
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

TensorVector operator*(const LaurentQ& c, const TensorVector& v) {
    TensorVector r(v.space_);
    if (c.is_zero()) return r;
    for (const auto& [s, x] : v.terms_) r.terms_.emplace(s, c * x);
    return r;
}

std::string TensorVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << state_id(s);
        first = false;
    }
    return os.str();
}

}  // namespace lzb
