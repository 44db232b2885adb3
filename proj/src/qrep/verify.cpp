#include <algorithm>
#include <random>
#include <set>

#include "lzb/qrep.hpp"

namespace lzb {

void QrepReport::record(const std::string& relation, const std::string& state, const std::string& lhs,
                        const std::string& rhs) {
    ++failure_count;
    if (failures.size() < 10) failures.push_back({relation, state, lhs, rhs});
}

namespace {

void check_equal(QrepReport& r, const std::string& relation, const TensorState& s, const TensorVector& lhs,
                 const TensorVector& rhs) {
    ++r.checks;
    if (lhs != rhs) r.record(relation, state_id(s), lhs.to_string(), rhs.to_string());
}

void check_true(QrepReport& r, bool ok, const std::string& relation, const std::string& state,
                const std::string& lhs = "", const std::string& rhs = "") {
    ++r.checks;
    if (!ok) r.record(relation, state, lhs, rhs);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> unit(int len, int i, int scale = 1) {
    std::vector<int> e(static_cast<std::size_t>(len), 0);
    e[static_cast<std::size_t>(i - 1)] = scale;
    return e;
}

const char* gen_name(Gen g) { return g == Gen::E ? "E" : "F"; }

/// Label of one factor: 1 when n+1 lies in S, else 2.
std::vector<int> block_label(int n1, const TensorState& s) {
    std::vector<int> l;
    for (const auto& f : s) l.push_back(((f.mask >> (n1 - 1)) & 1U) ? 1 : 2);
    return l;
}

std::vector<BigRat> jstar_coords(int n1, const FactorState& f) {
    return map_jstar(state_weight(n1, {f})).coords;
}

}  // namespace

int measure_b_scaled(int n, int i, int eps, int k, int K) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("need n >= 2 and 1 <= i <= n-1");
    const TensorSpace sp(n + 1, {i}, K);
    const TensorVector u = TensorVector::extremal(sp);
    const auto small = reduced_word(AffineWeylElt::translation(n - 1, unit(n - 1, i, k)));
    const auto big = reduced_word(AffineWeylElt::translation(n, unit(n, i, k)));
    return minus_q_exponent(apply_S_word(small, u, Side::Psi, eps), apply_S_word(big, u, Side::Chevalley));
}

Constants measure_constants(int n, int eps, int K) {
    if (n < 2) throw std::invalid_argument("constants need n >= 2");
    Constants c{n, eps, K, {}, {}};
    for (int i = 1; i <= n - 1; ++i) c.b[i] = measure_b_scaled(n, i, eps, 1, K);
    for (int i = 2; i <= n; ++i) {
        const TensorSpace sp(n + 1, {i}, K);
        const TensorVector u = apply_S_word(w_word(n, i), TensorVector::extremal(sp), Side::Chevalley);
        const auto small = reduced_word(AffineWeylElt::translation(n - 1, unit(n - 1, i - 1)));
        const auto big = reduced_word(AffineWeylElt::translation(n, unit(n, i - 1)));
        c.a[i] = minus_q_exponent(apply_S_word(small, u, Side::Psi, eps), apply_S_word(big, u, Side::Chevalley));
    }
    return c;
}

QrepReport verify_relations(int n1, const std::vector<int>& signature, int K, std::uint32_t seed) {
    if (K < 3) throw std::invalid_argument("relations need K >= 3");
    const TensorSpace sp(n1, signature, K);
    const int rank = n1 - 1;
    QrepReport r;
    r.kind = "relations";
    const auto states = basis_states(sp, 2);
    r.fields = {{"n1", std::to_string(n1)}, {"signature", join(signature)}, {"K", std::to_string(K)},
                {"states", std::to_string(states.size())}};

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::vector<AffineCoweight> hs;
    for (int c = 0; c < 10; ++c) {
        AffineCoweight h = AffineCoweight::zero(rank);
        for (auto& x : h.coords) x = coord(rng);
        hs.push_back(h);
    }

    for (const TensorState& s : states) {
        const TensorVector v = TensorVector::basis(sp, s);
        for (int i = 0; i < n1; ++i) {
            check_equal(r, "q^{alpha_" + std::to_string(i) + "^v} = t_" + std::to_string(i), s,
                        act_qh(AffineCoweight::coroot(rank, i), v), act_t(i, 1, v));
            for (int j = 0; j < n1; ++j) {
                const int a = cartan_entry(rank, i, j);
                const std::string ij = std::to_string(i) + "," + std::to_string(j);
                for (Gen g : {Gen::E, Gen::F}) {
                    const int sign = g == Gen::E ? 1 : -1;
                    check_equal(r, std::string("t ") + gen_name(g) + " t^-1 " + ij, s,
                                act_t(i, 1, act_chevalley(g, j, act_t(i, -1, v))),
                                LaurentQ::q_power(sign * a) * act_chevalley(g, j, v));
                }
                const TensorVector comm = act_chevalley(Gen::E, i, act_chevalley(Gen::F, j, v)) -
                                          act_chevalley(Gen::F, j, act_chevalley(Gen::E, i, v));
                const TensorVector expect =
                    i == j ? LaurentQ::q_int(state_pairing(n1, i, s)) * v : TensorVector(sp);
                check_equal(r, "[E,F] " + ij, s, comm, expect);
                if (i == j) continue;
                const int top = 1 - a;
                for (Gen g : {Gen::E, Gen::F}) {
                    TensorVector serre(sp);
                    for (int t = 0; t <= top; ++t) {
                        const TensorVector term =
                            divided_power(g, i, t, act_chevalley(g, j, divided_power(g, i, top - t, v)));
                        serre += LaurentQ(t % 2 == 0 ? 1 : -1) * term;
                    }
                    check_equal(r, std::string("Serre ") + gen_name(g) + " " + ij, s, serre, TensorVector(sp));
                }
            }
        }
        for (std::size_t c = 0; c < hs.size(); ++c) {
            const AffineCoweight& h = hs[c];
            const AffineCoweight minus_h = BigRat(-1) * h;
            for (int j = 0; j < n1; ++j) {
                const BigRat hj = pairing(h, AffineWeight::alpha(rank, j));
                const int e = static_cast<int>(hj.get_num().get_si());
                for (Gen g : {Gen::E, Gen::F}) {
                    const int sign = g == Gen::E ? 1 : -1;
                    check_equal(r, "q^h " + std::string(gen_name(g)) + "_" + std::to_string(j) + " q^-h, h=" + h.to_string(),
                                s, act_qh(h, act_chevalley(g, j, act_qh(minus_h, v))),
                                LaurentQ::q_power(sign * e) * act_chevalley(g, j, v));
                }
            }
        }
    }
    return r;
}

QrepReport verify_lemma_t(int n, int i, int m, int K) {
    if (n < 1 || i < 1 || i > n || m < 0 || K < 1) throw std::invalid_argument("need 1 <= i <= n, m >= 0, K >= 1");
    const int n1 = n + 1;
    const TensorSpace sp(n1, std::vector<int>(static_cast<std::size_t>(m), i), K);
    QrepReport r;
    r.kind = "lemma-t";
    r.fields = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"m", std::to_string(m)}, {"K", std::to_string(K)}};
    const std::uint32_t moved_once = extremal_factor(i).mask ^ (1U << (i - 1)) ^ (1U << i);
    const std::uint32_t moved_all = extremal_factor(i - 1).mask | (1U << n);

    std::vector<int> ks(static_cast<std::size_t>(m), -1);
    while (true) {
        TensorState base;
        for (int k : ks) base.push_back(extremal_factor(i, k));
        const TensorVector v = TensorVector::basis(sp, base);
        for (int p = 0; p <= m; ++p) {
            TensorVector closed_tensor(sp), closed_t(sp);
            for (std::uint32_t chosen = 0; chosen < (1U << m); ++chosen) {
                if (__builtin_popcount(chosen) != p) continue;
                int expo = -p * (p + 1) / 2;
                TensorState a = base, b = base;
                for (int pos = 0; pos < m; ++pos) {
                    if (!((chosen >> pos) & 1U)) continue;
                    expo += pos + 1;
                    a[static_cast<std::size_t>(pos)].mask = moved_once;
                    b[static_cast<std::size_t>(pos)].mask = moved_all;
                }
                closed_tensor.add(a, LaurentQ::q_power(expo));
                closed_t.add(b, LaurentQ::q_power(expo));
            }
            const std::string tag = " p=" + std::to_string(p);
            const TensorVector first = divided_power(Gen::F, i, p, v);
            check_equal(r, "F_i^(p) closed form" + tag, base, first, closed_tensor);
            TensorVector chain = first;
            for (int j = i + 1; j <= n; ++j) chain = divided_power(Gen::F, j, p, chain);
            check_equal(r, "F_n^(p)...F_i^(p) closed form" + tag, base, chain, closed_t);
        }
        std::size_t pos = 0;
        while (pos < ks.size() && ks[pos] == 1) ks[pos++] = -1;
        if (pos == ks.size()) break;
        ++ks[pos];
    }
    return r;
}

QrepReport verify_structure(const LevelZeroDominant& lam, int eps, int K) {
    const int n = lam.rank;
    if (n < 2) throw std::invalid_argument("structure checks need rank >= 2");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
    if (K < 2) throw std::invalid_argument("structure checks need K >= 2");
    const int n1 = n + 1;
    QrepReport r;
    r.kind = "structure";
    const AffineCoweight htilde = AffineCoweight::htilde(n);

    std::vector<TensorSpace> spaces{TensorSpace::for_weight(lam, K)};
    for (int i = 1; i <= n; ++i) spaces.emplace_back(n1, std::vector<int>{i}, K);

    // (a) q^{h~} commutes with the image of Psi_eps.
    for (const TensorSpace& sp : spaces)
        for (const TensorState& s : basis_states(sp, 2)) {
            const TensorVector v = TensorVector::basis(sp, s);
            for (int j = 0; j < n; ++j)
                for (Gen g : {Gen::E, Gen::F})
                    check_equal(r, std::string("(a) [q^h~, Psi(") + gen_name(g) + "_" + std::to_string(j) + ")]", s,
                                act_qh(htilde, act_psi(g, j, eps, v)), act_psi(g, j, eps, act_qh(htilde, v)));
        }

    // (b) eigenvalues on L1 / L2 and the action of E_0, F_0, E_n, F_n between them.
    struct Rule {
        Gen g;
        int j;
        int on;    // label of the source
        int into;  // label of the image, 0 for the zero map
    };
    const std::vector<Rule> table{{Gen::F, n, 1, 0}, {Gen::F, n, 2, 1}, {Gen::F, 0, 1, 2}, {Gen::F, 0, 2, 0},
                                  {Gen::E, n, 1, 2}, {Gen::E, n, 2, 0}, {Gen::E, 0, 1, 0}, {Gen::E, 0, 2, 1}};
    for (int i = 1; i <= n; ++i) {
        const TensorSpace& sp = spaces[static_cast<std::size_t>(i)];
        for (const TensorState& s : basis_states(sp, 2)) {
            const TensorVector v = TensorVector::basis(sp, s);
            const int label = block_label(n1, s)[0];
            const int expected = label == 1 ? i - n1 : i;
            check_equal(r, "(b) q^h~ eigenvalue on L" + std::to_string(label), s, act_qh(htilde, v),
                        LaurentQ::q_power(expected) * v);
            for (const Rule& rule : table) {
                if (rule.on != label) continue;
                const TensorVector img = act_chevalley(rule.g, rule.j, v);
                bool ok = true;
                if (rule.into == 0) {
                    ok = img.is_zero();
                } else {
                    for (const auto& [t, c] : img.terms()) ok = ok && block_label(n1, t)[0] == rule.into;
                }
                check_true(r, ok,
                           std::string("(b) ") + gen_name(rule.g) + "_" + std::to_string(rule.j) + " on L" +
                               std::to_string(rule.on),
                           state_id(s), img.to_string(), rule.into ? "inside L" + std::to_string(rule.into) : "0");
            }
        }
    }

    // (c) weight multiplicities of Psi^* V(varpi_i) against V(varpi_{i-1}) + V(varpi_i) of rank n-1.
    for (int i = 1; i <= n; ++i) {
        const TensorSpace& sp = spaces[static_cast<std::size_t>(i)];
        for (int k = -(K - 2); k <= K - 2; ++k) {
            std::map<std::vector<BigRat>, int> seen, predicted;
            std::set<std::uint32_t> highest;
            for (std::uint32_t mask = 0; mask < (1U << n1); ++mask) {
                if (__builtin_popcount(mask) != i) continue;
                const FactorState f{mask, k};
                ++seen[jstar_coords(n1, f)];
                const TensorVector v = TensorVector::basis(sp, {f});
                bool killed = true;
                for (int j = 1; j < n && killed; ++j) killed = act_psi(Gen::E, j, eps, v).is_zero();
                if (killed) highest.insert(mask);
            }
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                const int size = __builtin_popcount(mask);
                if (size != i - 1 && size != i) continue;
                ++predicted[state_weight(n, {FactorState{mask, k}}).coords];
            }
            const std::string where = "i=" + std::to_string(i) + " k=" + std::to_string(k);
            check_true(r, seen == predicted, "(c) weight multiplicities", where, std::to_string(seen.size()),
                       std::to_string(predicted.size()));
            const std::set<std::uint32_t> expect{extremal_factor(i - 1).mask | (1U << n), extremal_factor(i).mask};
            check_true(r, highest == expect, "(c) highest weight vectors", where, std::to_string(highest.size()), "2");
        }
    }

    // (d) block triangularity on the ordered tensor model of lam.
    long offdiag = 0;
    const TensorSpace& big = spaces.front();
    for (const TensorState& s : basis_states(big, 2)) {
        const TensorVector v = TensorVector::basis(big, s);
        const std::vector<int> from = block_label(n1, s);
        const long p = std::count(from.begin(), from.end(), 1);
        for (int j = 0; j < n; ++j)
            for (Gen g : {Gen::E, Gen::F}) {
                const TensorVector img = act_psi(g, j, eps, v);
                bool ok = true;
                for (const auto& [t, c] : img.terms()) {
                    const std::vector<int> to = block_label(n1, t);
                    if (to != from) ++offdiag;
                    if (std::count(to.begin(), to.end(), 1) != p) ok = false;
                    if (j != 0 && to != from) ok = false;
                    if (eps == 1 && to < from) ok = false;
                    if (eps == -1 && from < to) ok = false;
                }
                check_true(r, ok, std::string("(d) block order of Psi(") + gen_name(g) + "_" + std::to_string(j) + ")",
                           state_id(s), img.to_string(), eps == 1 ? "blocks >= source" : "blocks <= source");
            }
    }

    // (e) closed forms on each homogeneous factor group.
    for (int i = 1; i <= n; ++i) {
        const int m = lam.m[static_cast<std::size_t>(i - 1)];
        if (m == 0) continue;
        const QrepReport sub = verify_lemma_t(n, i, m, K);
        r.checks += sub.checks;
        for (const auto& f : sub.failures) r.record("(e) " + f.relation, f.state, f.lhs, f.rhs);
        r.failure_count += sub.failure_count - static_cast<long>(sub.failures.size());
    }

    r.fields = {{"n", std::to_string(n)}, {"lam", join(lam.m)}, {"eps", std::to_string(eps)},
                {"K", std::to_string(K)}, {"offdiag", std::to_string(offdiag)}};
    return r;
}

}  // namespace lzb
