#include <stdexcept>

#include "lzb/symfun.hpp"
#include "memo.hpp"

namespace lzb {

namespace {

detail::Memo<std::pair<Partition, int>, GLPolyT<BigInt>>& schur_memo() {
    static detail::Memo<std::pair<Partition, int>, GLPolyT<BigInt>> m;
    return m;
}

}  // namespace

GLPolyT<BigInt> schur(const Partition& shape, int nvars) {
    if (shape.length() > nvars) throw std::invalid_argument("shape has more rows than variables");
    auto key = std::make_pair(shape, nvars);
    if (auto v = schur_memo().find(key)) return *v;
    GLPolyT<BigInt> out(nvars);
    if (nvars == 0) {
        out.add_term({}, BigInt(1));
    } else {
        for (const Partition& m : horizontal_strips(shape, nvars - 1)) {
            const int d = shape.size() - m.size();
            const GLPolyT<BigInt> sub = schur(m, nvars - 1);
            for (const auto& [e, v] : sub.terms()) {
                Exponent f = e;
                f.push_back(d);
                out.add_term(f, v);
            }
        }
    }
    return schur_memo().insert(key, std::move(out));
}

GLPolyT<BigInt> skew_schur(const Partition& outer, const Partition& inner, int nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    GLPolyT<BigInt> out(nvars);
    if (!outer.contains(inner)) return out;
    if (nvars == 0) {
        if (outer == inner) out.add_term({}, BigInt(1));
        return out;
    }
    for (const Partition& p : horizontal_strips(outer, outer.length())) {
        if (!p.contains(inner)) continue;
        const int d = outer.size() - p.size();
        const GLPolyT<BigInt> sub = skew_schur(p, inner, nvars - 1);
        for (const auto& [e, v] : sub.terms()) {
            Exponent f = e;
            f.push_back(d);
            out.add_term(f, v);
        }
    }
    return out;
}

std::map<Partition, BigInt> schur_decompose(const GLPolyT<BigInt>& p) {
    std::map<Partition, BigInt> out;
    GLPolyT<BigInt> rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        for (std::size_t i = 0; i + 1 < lead.size(); ++i)
            if (lead[i] < lead[i + 1] || lead[i + 1] < 0) throw std::invalid_argument("schur_decompose needs a symmetric polynomial");
        if (!lead.empty() && lead.back() < 0) throw std::invalid_argument("schur_decompose needs a polynomial");
        Partition shape(lead);
        const BigInt coef = c;
        out[shape] = coef;
        GLPolyT<BigInt> s = schur(shape, p.nvars());
        s.scale(coef);
        rest -= s;
    }
    return out;
}

BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    auto parts = schur_decompose(skew_schur(lam, mu, nu.length()));
    auto it = parts.find(nu);
    return it == parts.end() ? BigInt(0) : it->second;
}

}  // namespace lzb
