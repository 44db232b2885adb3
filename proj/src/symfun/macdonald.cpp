#include <stdexcept>

#include "lzb/symfun.hpp"
#include "memo.hpp"

namespace lzb {

namespace {

using Key = std::pair<Partition, int>;

// P_shape(x_1..x_n) = sum_M x_n^{|shape/M|} coef(shape, M) P_M(x_1..x_{n-1}).
template <class C, class Coef, class Rec>
GLPolyT<C> branch(const Partition& shape, int n, Coef coef, Rec rec) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    if (shape.length() > n) throw std::invalid_argument("shape has more rows than variables");
    GLPolyT<C> out(n);
    if (n == 0) {
        out.add_term({}, C(1));
        return out;
    }
    for (const Partition& m : horizontal_strips(shape, n - 1)) {
        const C c = coef(shape, m);
        const int d = shape.size() - m.size();
        const GLPolyT<C> sub = rec(m, n - 1);
        for (const auto& [e, v] : sub.terms()) {
            Exponent f = e;
            f.push_back(d);
            out.add_term(f, v * c);
        }
    }
    return out;
}

detail::Memo<Key, GLPoly>& gl_memo() {
    static detail::Memo<Key, GLPoly> m;
    return m;
}
detail::Memo<Key, GLPolyT<LaurentQ>>& t0_memo() {
    static detail::Memo<Key, GLPolyT<LaurentQ>> m;
    return m;
}
detail::Memo<std::pair<Partition, Partition>, RatFuncQT>& psi_memo() {
    static detail::Memo<std::pair<Partition, Partition>, RatFuncQT> m;
    return m;
}

RatFuncQT psi_cached(const Partition& outer, const Partition& inner) {
    auto key = std::make_pair(outer, inner);
    if (auto v = psi_memo().find(key)) return *v;
    return psi_memo().insert(key, psi_coefficient(outer, inner));
}

}  // namespace

GLPoly macdonald_gl(const Partition& shape, int nvars) {
    Key key{shape, nvars};
    if (auto v = gl_memo().find(key)) return *v;
    GLPoly p = branch<RatFuncQT>(shape, nvars, psi_cached, macdonald_gl);
    return gl_memo().insert(key, std::move(p));
}

GLPolyT<LaurentQ> macdonald_t0(const Partition& shape, int nvars) {
    Key key{shape, nvars};
    if (auto v = t0_memo().find(key)) return *v;
    GLPolyT<LaurentQ> p = branch<LaurentQ>(shape, nvars, psi_at_t0, macdonald_t0);
    return t0_memo().insert(key, std::move(p));
}

GLPolyT<LaurentQ> specialize_t(const GLPoly& p, TValue t) {
    return map_coeffs<LaurentQ>(p, [t](const RatFuncQT& c) { return ratfunc_eval_t(c, t); });
}

}  // namespace lzb
