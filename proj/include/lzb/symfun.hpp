// The GL character ring: Schur and Macdonald polynomials via branching,
// Littlewood-Richardson coefficients, and the class projections.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lzb/exactring.hpp"
#include "lzb/shapes.hpp"

namespace lzb {

using Exponent = std::vector<int>;

inline bool coeff_is_zero(const BigInt& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const BigRat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const LaurentQ& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFuncQT& c) { return c.is_zero(); }

/// Sparse polynomial in nvars variables with integer exponent vectors.
template <class C>
class ExpPoly {
public:
    using Coeff = C;
    using Terms = std::map<Exponent, C>;

    explicit ExpPoly(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    C coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const Exponent& e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    ExpPoly& operator+=(const ExpPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ExpPoly& operator-=(const ExpPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ExpPoly& scale(const C& s) {
        if (coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = c * s;
        return *this;
    }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

protected:
    void check(const ExpPoly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    }
    int nvars_;
    Terms terms_;
};

/// Element of the GL character ring in x_1..x_n.
template <class C>
class GLPolyT : public ExpPoly<C> {
public:
    using ExpPoly<C>::ExpPoly;
    GLPolyT(const ExpPoly<C>& p) : ExpPoly<C>(p) {}  // NOLINT

    friend GLPolyT operator+(GLPolyT a, const GLPolyT& b) {
        a += b;
        return a;
    }
    friend GLPolyT operator-(GLPolyT a, const GLPolyT& b) {
        a -= b;
        return a;
    }
    friend GLPolyT operator*(const GLPolyT& a, const GLPolyT& b) {
        a.check(b);
        GLPolyT r(a.nvars());
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                Exponent e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
};

/// Element of the class ring: exponent vectors normalized to last coordinate 0.
template <class C>
class ClassPolyT : public ExpPoly<C> {
public:
    explicit ClassPolyT(int nvars = 0) : ExpPoly<C>(nvars) {}

    static Exponent normalize(Exponent e) {
        if (!e.empty()) {
            const int last = e.back();
            for (int& x : e) x -= last;
        }
        return e;
    }
    void add_class(const Exponent& e, const C& c) { this->add_term(normalize(e), c); }

    friend ClassPolyT operator+(ClassPolyT a, const ClassPolyT& b) {
        a += b;
        return a;
    }
};

using GLPoly = GLPolyT<RatFuncQT>;
using ClassPoly = ClassPolyT<RatFuncQT>;

template <class To, class From, class F>
GLPolyT<To> map_coeffs(const GLPolyT<From>& p, F f) {
    GLPolyT<To> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
    return r;
}

template <class To, class From, class F>
ClassPolyT<To> map_coeffs(const ClassPolyT<From>& p, F f) {
    ClassPolyT<To> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
    return r;
}

template <class C>
bool is_symmetric(const ExpPoly<C>& p) {
    for (int i = 0; i + 1 < p.nvars(); ++i)
        for (const auto& [e, c] : p.terms()) {
            Exponent f = e;
            std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i + 1)]);
            auto it = p.terms().find(f);
            if (it == p.terms().end() || !(it->second == c)) return false;
        }
    return true;
}

template <class C>
bool is_homogeneous(const ExpPoly<C>& p, int degree) {
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int x : e) d += x;
        if (d != degree) return false;
    }
    return true;
}

/// Pi_n: x^e -> class of e - e_n (1,...,1).
template <class C>
ClassPolyT<C> project_class(const ExpPoly<C>& p) {
    ClassPolyT<C> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_class(e, c);
    return r;
}

/// Theta on GL polynomials in n+1 variables: x_{n+1} := 1, then project in n variables.
template <class C>
ClassPolyT<C> theta(const GLPolyT<C>& p) {
    if (p.nvars() < 1) throw std::invalid_argument("theta needs at least one variable");
    ClassPolyT<C> r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) r.add_class(Exponent(e.begin(), e.end() - 1), c);
    return r;
}

/// Theta on classes in n+1 variables (representatives already end in 0).
template <class C>
ClassPolyT<C> theta(const ClassPolyT<C>& p) {
    if (p.nvars() < 1) throw std::invalid_argument("theta needs at least one variable");
    ClassPolyT<C> r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) r.add_class(Exponent(e.begin(), e.end() - 1), c);
    return r;
}

/// psi_{outer/inner}(q,t) as a telescoped finite product.
RatFuncQT psi_coefficient(const Partition& outer, const Partition& inner);
/// prod_i (lambda_i - lambda_{i+1} over lambda_i - mu_i)_q
LaurentQ psi_at_t0(const Partition& outer, const Partition& inner);

GLPoly macdonald_gl(const Partition& shape, int nvars);
GLPolyT<LaurentQ> macdonald_t0(const Partition& shape, int nvars);
GLPolyT<BigInt> schur(const Partition& shape, int nvars);

GLPolyT<LaurentQ> specialize_t(const GLPoly& p, TValue t);

/// Monomial expansion of s_{outer/inner}(y_1..y_l) via strip chains.
GLPolyT<BigInt> skew_schur(const Partition& outer, const Partition& inner, int nvars);
/// Expansion of a symmetric polynomial in the Schur basis (partitions of length <= nvars).
std::map<Partition, BigInt> schur_decompose(const GLPolyT<BigInt>& p);
BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace lzb
