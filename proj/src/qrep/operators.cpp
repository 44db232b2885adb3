#include <sstream>

#include "lzb/qrep.hpp"
#include "lzb/symfun.hpp"

namespace lzb {

namespace {

bool has(std::uint32_t mask, int a) { return (mask >> (a - 1)) & 1U; }
std::uint32_t bit(int a) { return 1U << (a - 1); }

std::optional<FactorState> move(int n1, Gen g, int j, const FactorState& s) {
    int from = 0, to = 0, dk = 0;
    if (j == 0) {
        from = g == Gen::F ? n1 : 1;
        to = g == Gen::F ? 1 : n1;
        dk = g == Gen::F ? -1 : 1;
    } else {
        from = g == Gen::F ? j : j + 1;
        to = g == Gen::F ? j + 1 : j;
    }
    if (!has(s.mask, from) || has(s.mask, to)) return std::nullopt;
    return FactorState{(s.mask & ~bit(from)) | bit(to), s.k + dk};
}

int to_int(const BigRat& r) {
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw std::invalid_argument("coweight is not integral");
    return static_cast<int>(r.get_num().get_si());
}

void check_node(const TensorSpace& sp, int j) {
    if (j < 0 || j >= sp.n1) throw std::invalid_argument("node index out of range");
}

void check_psi(const TensorSpace& sp, int j, int eps) {
    if (sp.n1 < 3) throw std::invalid_argument("Psi needs n1 >= 3");
    if (j < 0 || j >= sp.n1 - 1) throw std::invalid_argument("sl^_n node index out of range");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
}

TensorVector divide_by_factorial(const TensorVector& v, int m) {
    const LaurentQ f = LaurentQ::q_factorial(m);
    TensorVector r(v.space());
    for (const auto& [s, c] : v.terms()) {
        auto quo = c.divide_exact(f);
        if (!quo) throw ArithmeticError("divided power is not integral at " + state_id(s));
        r.add(s, *quo);
    }
    return r;
}

struct WeightKey {
    std::vector<int> pairings;
    int degree;
    friend bool operator==(const WeightKey&, const WeightKey&) = default;
};

WeightKey weight_key(int n1, const TensorState& s) {
    WeightKey w{{}, state_degree(s)};
    for (int j = 0; j < n1; ++j) w.pairings.push_back(state_pairing(n1, j, s));
    return w;
}

}  // namespace

TensorVector act_chevalley(Gen g, int j, const TensorVector& v) {
    const TensorSpace& sp = v.space();
    check_node(sp, j);
    TensorVector r(sp);
    for (const auto& [s, c] : v.terms()) {
        const std::size_t m = s.size();
        std::vector<int> pair(m);
        int total = 0;
        for (std::size_t p = 0; p < m; ++p) total += pair[p] = factor_pairing(sp.n1, j, s[p]);
        int before = 0;
        for (std::size_t p = 0; p < m; ++p) {
            const int after = total - before - pair[p];
            if (auto moved = move(sp.n1, g, j, s[p])) {
                TensorState t = s;
                t[p] = *moved;
                r.add(t, c.shifted(g == Gen::F ? before : -after));
            }
            before += pair[p];
        }
    }
    return r;
}

TensorVector act_t(int j, int power, const TensorVector& v) {
    check_node(v.space(), j);
    TensorVector r(v.space());
    for (const auto& [s, c] : v.terms()) r.add(s, c.shifted(power * state_pairing(v.space().n1, j, s)));
    return r;
}

TensorVector act_qh(const AffineCoweight& h, const TensorVector& v) {
    const int n1 = v.space().n1;
    if (h.rank != n1 - 1) throw std::invalid_argument("coweight rank does not match the module");
    std::vector<int> hc;
    for (const auto& x : h.coords) hc.push_back(to_int(x));
    TensorVector r(v.space());
    for (const auto& [s, c] : v.terms()) {
        int e = hc.back() * state_degree(s);
        for (int j = 0; j < n1; ++j) e += hc[static_cast<std::size_t>(j)] * state_pairing(n1, j, s);
        r.add(s, c.shifted(e));
    }
    return r;
}

TensorVector divided_power(Gen g, int j, int m, const TensorVector& v) {
    if (m < 0) throw std::invalid_argument("negative divided power");
    TensorVector r = v;
    for (int c = 0; c < m; ++c) r = act_chevalley(g, j, r);
    return m <= 1 ? r : divide_by_factorial(r, m);
}

TensorVector act_psi(Gen g, int j, int eps, const TensorVector& v) {
    check_psi(v.space(), j, eps);
    if (j != 0) return act_chevalley(g, j, v);
    const int n = v.space().n1 - 1;
    // Products apply their rightmost factor first.
    if (g == Gen::E) {
        const TensorVector en_e0 = act_chevalley(Gen::E, n, act_chevalley(Gen::E, 0, v));
        const TensorVector e0_en = act_chevalley(Gen::E, 0, act_chevalley(Gen::E, n, v));
        if (eps == 1) return en_e0 - LaurentQ::q_power(-1) * e0_en;
        return e0_en - LaurentQ::q_power(-1) * en_e0;
    }
    const TensorVector f0_fn = act_chevalley(Gen::F, 0, act_chevalley(Gen::F, n, v));
    const TensorVector fn_f0 = act_chevalley(Gen::F, n, act_chevalley(Gen::F, 0, v));
    if (eps == 1) return f0_fn - LaurentQ::q_power(1) * fn_f0;
    return fn_f0 - LaurentQ::q_power(1) * f0_fn;
}

TensorVector psi_divided_power(Gen g, int j, int m, int eps, const TensorVector& v) {
    if (m < 0) throw std::invalid_argument("negative divided power");
    TensorVector r = v;
    for (int c = 0; c < m; ++c) r = act_psi(g, j, eps, r);
    return m <= 1 ? r : divide_by_factorial(r, m);
}

TensorVector act_psi_qh(const AffineCoweight& h, const TensorVector& v) {
    if (h.rank != v.space().n1 - 2) throw std::invalid_argument("coweight rank must be n1 - 2");
    return act_qh(map_j(h), v);
}

int psi_pairing(int n1, int j, const TensorState& s) {
    if (j == 0) return state_pairing(n1, 0, s) + state_pairing(n1, n1 - 1, s);
    return state_pairing(n1, j, s);
}

int htilde_exponent(int n1, const TensorState& s) {
    int e = 0;
    for (int i = 1; i < n1; ++i) e += i * state_pairing(n1, i, s);
    return e;
}

std::map<int, TensorVector> q_htilde_grade(const TensorVector& v) {
    std::map<int, TensorVector> out;
    for (const auto& [s, c] : v.terms()) {
        auto it = out.try_emplace(htilde_exponent(v.space().n1, s), v.space()).first;
        it->second.add(s, c);
    }
    return out;
}

TensorVector z_mult(int factor, int power, const TensorVector& v) {
    if (factor < 0 || factor >= static_cast<int>(v.space().size())) throw std::invalid_argument("factor out of range");
    TensorVector r(v.space());
    for (const auto& [s, c] : v.terms()) {
        TensorState t = s;
        t[static_cast<std::size_t>(factor)].k += power;
        r.add(t, c);
    }
    return r;
}

TensorVector apply_schur_current(const std::vector<Partition>& c0, const TensorVector& v) {
    const TensorSpace& sp = v.space();
    if (static_cast<int>(c0.size()) > sp.n1 - 1) throw std::invalid_argument("too many partitions in c0");
    TensorVector cur = v;
    for (std::size_t idx = 0; idx < c0.size(); ++idx) {
        const Partition& rho = c0[idx];
        if (rho.empty()) continue;
        std::vector<int> slots;
        for (std::size_t p = 0; p < sp.size(); ++p)
            if (sp.signature[p] == static_cast<int>(idx) + 1) slots.push_back(static_cast<int>(p));
        TensorVector next(sp);
        if (rho.length() <= static_cast<int>(slots.size())) {
            const GLPolyT<BigInt> s = schur(rho, static_cast<int>(slots.size()));
            for (const auto& [e, coef] : s.terms()) {
                TensorVector shifted = cur;
                for (std::size_t nu = 0; nu < slots.size(); ++nu)
                    if (e[nu] != 0) shifted = z_mult(slots[nu], -e[nu], shifted);
                next += LaurentQ(BigRat(coef)) * shifted;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

TensorVector apply_S(int i, const TensorVector& v, Side side, int eps) {
    if (v.is_zero()) throw std::invalid_argument("S-operator applied to the zero vector");
    const int n1 = v.space().n1;
    const TensorState& s0 = v.terms().begin()->first;
    const WeightKey w0 = weight_key(n1, s0);
    for (const auto& [s, c] : v.terms())
        if (!(weight_key(n1, s) == w0)) throw std::invalid_argument("S-operator needs a weight vector");
    const bool psi = side == Side::Psi;
    const int a = psi ? psi_pairing(n1, i, s0) : state_pairing(n1, i, s0);
    auto gen = [&](Gen g, const TensorVector& x) { return psi ? act_psi(g, i, eps, x) : act_chevalley(g, i, x); };
    const Gen killer = a >= 0 ? Gen::E : Gen::F;
    if (!gen(killer, v).is_zero())
        throw NotExtremalError(1, i, std::string("not ") + std::to_string(i) + "-extremal: " +
                                         (killer == Gen::E ? "E" : "F") + "_" + std::to_string(i) + " does not vanish");
    const Gen g = a >= 0 ? Gen::F : Gen::E;
    const int m = a >= 0 ? a : -a;
    return psi ? psi_divided_power(g, i, m, eps, v) : divided_power(g, i, m, v);
}

TensorVector apply_S_word(const std::vector<int>& word, const TensorVector& v, Side side, int eps) {
    TensorVector r = v;
    int step = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        ++step;
        try {
            r = apply_S(*it, r, side, eps);
        } catch (const NotExtremalError& e) {
            throw NotExtremalError(step, *it, std::string(e.what()) + " at step " + std::to_string(step));
        }
    }
    return r;
}

int minus_q_exponent(const TensorVector& lhs, const TensorVector& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) throw std::logic_error("ratio with a zero vector");
    if (lhs.terms().size() != rhs.terms().size()) throw std::logic_error("vectors have different supports");
    std::optional<LaurentQ> ratio;
    for (auto a = lhs.terms().begin(), b = rhs.terms().begin(); a != lhs.terms().end(); ++a, ++b) {
        if (a->first != b->first) throw std::logic_error("vectors have different supports");
        auto quo = a->second.divide_exact(b->second);
        if (!quo || !quo->is_monomial()) throw std::logic_error("ratio is not a monomial");
        if (ratio && *ratio != *quo) throw std::logic_error("vectors are not proportional");
        ratio = *quo;
    }
    const auto& [e, c] = ratio->terms().front();
    const BigRat expected = e % 2 == 0 ? BigRat(1) : BigRat(-1);
    if (c != expected) throw std::logic_error("ratio " + ratio->to_string() + " is not a power of -q");
    return e;
}

std::string OperatorSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::E: os << "E_" << j; break;
        case Kind::F: os << "F_" << j; break;
        case Kind::T: os << "t_" << j << "^" << m; break;
        case Kind::QH: {
            os << "q^h(";
            for (std::size_t c = 0; c < h.size(); ++c) os << (c ? "," : "") << h[c];
            os << ")";
            break;
        }
        case Kind::DividedE: os << "E_" << j << "^(" << m << ")"; break;
        case Kind::DividedF: os << "F_" << j << "^(" << m << ")"; break;
        case Kind::PsiE: os << "Psi_" << eps << "(E_" << j << ")"; break;
        case Kind::PsiF: os << "Psi_" << eps << "(F_" << j << ")"; break;
        case Kind::ZMult: os << "z_" << factor << "^" << power; break;
        case Kind::SchurCurrent: {
            os << "s_c0(";
            for (std::size_t c = 0; c < c0.size(); ++c) os << (c ? "," : "") << c0[c].to_string();
            os << ")";
            break;
        }
    }
    return os.str();
}

TensorVector apply(const OperatorSpec& op, const TensorVector& v) {
    using K = OperatorSpec::Kind;
    switch (op.kind) {
        case K::E: return act_chevalley(Gen::E, op.j, v);
        case K::F: return act_chevalley(Gen::F, op.j, v);
        case K::T: return act_t(op.j, op.m, v);
        case K::QH: {
            AffineCoweight h = AffineCoweight::zero(v.space().n1 - 1);
            if (op.h.size() != h.coords.size()) throw std::invalid_argument("q^h needs n1 + 1 coordinates");
            for (std::size_t c = 0; c < op.h.size(); ++c) h.coords[c] = op.h[c];
            return act_qh(h, v);
        }
        case K::DividedE: return divided_power(Gen::E, op.j, op.m, v);
        case K::DividedF: return divided_power(Gen::F, op.j, op.m, v);
        case K::PsiE: return act_psi(Gen::E, op.j, op.eps, v);
        case K::PsiF: return act_psi(Gen::F, op.j, op.eps, v);
        case K::ZMult: return z_mult(op.factor, op.power, v);
        case K::SchurCurrent: return apply_schur_current(op.c0, v);
    }
    throw std::invalid_argument("unknown operator kind");
}

OperatorMatrix operator_matrix(const OperatorSpec& op, const TensorSpace& space) {
    OperatorMatrix out;
    for (const TensorState& s : basis_states(space)) {
        const std::string col = state_id(s);
        try {
            const TensorVector img = apply(op, TensorVector::basis(space, s));
            for (const auto& [t, c] : img.terms()) out.triplets.push_back({state_id(t), col, c});
        } catch (const TruncationError&) {
            out.boundary_columns.push_back(col);
        }
    }
    return out;
}

}  // namespace lzb
