// Truncated wedge-model simulator for tensor products of affinized fundamental
// modules of U_q'(sl^_{n1}): Chevalley and divided-power actions through the
// coproduct, the embedding Psi_eps of U_q(sl^_{n1-1}), S-operators on extremal
// vectors, the q^{h~} grading, and structural verifiers.
//
// Conventions. A factor of V(varpi_i) has basis u_{S,k} with S a subset of
// {1..n1} of size i and k the z-degree; u_{{1..i},0} is the extremal vector.
// F_j (j >= 1) moves j to j+1 in S with coefficient 1 and E_j moves it back.
// F_0 replaces n1 by 1 and lowers k by one; E_0 replaces 1 by n1 and raises k.
// On tensors, E_j and F_j act through E -> E (x) t^{-1} + 1 (x) E and
// F -> F (x) 1 + t (x) F, comultiplied left to right.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lzb/afflattice.hpp"
#include "lzb/exactring.hpp"
#include "lzb/shapes.hpp"

namespace lzb {

/// An action produced a z-degree outside [-K, K].
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An S-operator met a vector that is not extremal for its index.
class NotExtremalError : public std::runtime_error {
public:
    NotExtremalError(int step, int index, const std::string& what)
        : std::runtime_error(what), step(step), index(index) {}
    int step;   // 1-based, in application order
    int index;  // the simple reflection being applied
};

struct FactorState {
    std::uint32_t mask = 0;  // bit a-1 set iff a is in S
    int k = 0;
    friend auto operator<=>(const FactorState&, const FactorState&) = default;
};
using TensorState = std::vector<FactorState>;

/// Factors V(varpi_{i_1}) (x) ... (x) V(varpi_{i_m}) of U_q'(sl^_{n1}) with |k| <= K.
struct TensorSpace {
    int n1 = 2;
    std::vector<int> signature;
    int K = 3;

    TensorSpace() = default;
    TensorSpace(int n1, std::vector<int> signature, int K);
    /// The ordered tensor model of lam (indices 1 < 2 < ... < n), rank n = n1 - 1.
    static TensorSpace for_weight(const LevelZeroDominant& lam, int K);
    int rank() const { return n1 - 1; }
    std::size_t size() const { return signature.size(); }
    friend bool operator==(const TensorSpace&, const TensorSpace&) = default;
};

std::uint32_t subset_mask(const std::vector<int>& S);
std::vector<int> mask_subset(std::uint32_t mask);
FactorState extremal_factor(int i, int k = 0);

/// <alpha_j^v, weight> of one factor (nodes 0..n1-1).
int factor_pairing(int n1, int j, const FactorState& s);
int state_pairing(int n1, int j, const TensorState& s);
int state_degree(const TensorState& s);
/// Weight in the (Lambda_0..Lambda_{n1-1}, delta) basis; delta carries the total z-degree.
AffineWeight state_weight(int n1, const TensorState& s);
/// Canonical id, e.g. "[1,2|0][3|-1]".
std::string state_id(const TensorState& s);

/// Basis states with every |k| <= K - margin, in canonical order.
std::vector<TensorState> basis_states(const TensorSpace& space, int margin = 0);

class TensorVector {
public:
    explicit TensorVector(TensorSpace space);
    static TensorVector basis(const TensorSpace& space, const TensorState& s);
    /// u_{varpi_{i_1}} (x) ... (x) u_{varpi_{i_m}}, all k = 0.
    static TensorVector extremal(const TensorSpace& space);

    const TensorSpace& space() const { return space_; }
    const std::map<TensorState, LaurentQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentQ coeff(const TensorState& s) const;

    /// Adds c*s; throws TruncationError when s leaves the window.
    void add(const TensorState& s, const LaurentQ& c);
    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const LaurentQ& c, const TensorVector& v);
    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    std::string to_string() const;

private:
    TensorSpace space_;
    std::map<TensorState, LaurentQ> terms_;
};

enum class Gen { E, F };

TensorVector act_chevalley(Gen g, int j, const TensorVector& v);
/// t_j^power.
TensorVector act_t(int j, int power, const TensorVector& v);
/// q^h for an integral coweight h of rank n1-1.
TensorVector act_qh(const AffineCoweight& h, const TensorVector& v);
/// g^m / [m]!; throws ArithmeticError if the division is not exact.
TensorVector divided_power(Gen g, int j, int m, const TensorVector& v);

/// Psi_eps(g_j) for a generator of sl^_n, n = n1 - 1 >= 2, j in 0..n-1.
TensorVector act_psi(Gen g, int j, int eps, const TensorVector& v);
TensorVector psi_divided_power(Gen g, int j, int m, int eps, const TensorVector& v);
/// Psi_eps(q^h) = q^{j(h)} for an integral coweight of rank n1-2.
TensorVector act_psi_qh(const AffineCoweight& h, const TensorVector& v);
/// <j(alpha_j^v), weight>, the sl^_n pairing seen through Psi.
int psi_pairing(int n1, int j, const TensorState& s);

/// <h~, weight> with h~ = sum_{i=1}^{n1-1} i alpha_i^v.
int htilde_exponent(int n1, const TensorState& s);
/// Splits v by the q^{h~}-eigenvalue exponent.
std::map<int, TensorVector> q_htilde_grade(const TensorVector& v);

/// Multiplies by z on factor nu (0-based): k -> k + power there.
TensorVector z_mult(int factor, int power, const TensorVector& v);
/// s_{rho_i}(z_{i,1}^{-1}, ..., z_{i,m_i}^{-1}) applied for every fundamental
/// index i; c0[i-1] is rho_i and z_{i,nu} is the nu-th factor of index i.
TensorVector apply_schur_current(const std::vector<Partition>& c0, const TensorVector& v);

enum class Side { Chevalley, Psi };
/// S_i on a weight vector; on the Psi side i indexes sl^_n and eps selects the embedding.
TensorVector apply_S(int i, const TensorVector& v, Side side = Side::Chevalley, int eps = 1);
/// S_{w_1} ... S_{w_l} v, rightmost first.
TensorVector apply_S_word(const std::vector<int>& word, const TensorVector& v, Side side = Side::Chevalley,
                          int eps = 1);

/// Exponent c with lhs = (-q)^c rhs; throws std::logic_error when no such c exists.
int minus_q_exponent(const TensorVector& lhs, const TensorVector& rhs);

struct Constants {
    int n = 2;
    int eps = 1;
    int K = 2;
    std::map<int, int> a;  // 2 <= i <= n
    std::map<int, int> b;  // 1 <= i <= n-1
};
Constants measure_constants(int n, int eps, int K);
/// Exponent c in S_{t_{k alpha_i^v}} u = (-q)^c S~_{t_{k alpha~_i^v}} u on u = u_{varpi_i}.
int measure_b_scaled(int n, int i, int eps, int k, int K);

struct OperatorSpec {
    enum class Kind { E, F, T, QH, DividedE, DividedF, PsiE, PsiF, ZMult, SchurCurrent };
    Kind kind = Kind::E;
    int j = 0;
    int m = 1;        // divided-power order, or t exponent
    int eps = 1;
    int factor = 0;   // z_mult
    int power = 1;    // z_mult
    std::vector<int> h;           // q^h coordinates alpha_0^v..alpha_r^v, d
    std::vector<Partition> c0;    // schur current
    std::string to_string() const;
};
TensorVector apply(const OperatorSpec& op, const TensorVector& v);

struct Triplet {
    std::string row;
    std::string col;
    LaurentQ coef;
};
struct OperatorMatrix {
    std::vector<Triplet> triplets;
    std::vector<std::string> boundary_columns;  // images leave the window
};
OperatorMatrix operator_matrix(const OperatorSpec& op, const TensorSpace& space);

struct QFailure {
    std::string relation;
    std::string state;
    std::string lhs;
    std::string rhs;
};

struct QrepReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;
    long checks = 0;
    long failure_count = 0;
    std::vector<QFailure> failures;  // the first few, in check order
    bool pass() const { return failure_count == 0; }
    void record(const std::string& relation, const std::string& state, const std::string& lhs,
                const std::string& rhs);
};

/// Defining relations on every state with all |k| <= K - 2.
QrepReport verify_relations(int n1, const std::vector<int>& signature, int K, std::uint32_t seed = 2024);
/// Checks (a)-(d) on the ordered tensor model of lam and on each fundamental factor.
QrepReport verify_structure(const LevelZeroDominant& lam, int eps, int K);
/// Closed forms of F_i^{(p)} on V(varpi_i)^{(x)m} and of F_n^{(p)}...F_i^{(p)}, all p <= m,
/// all k-tuples in {-1,0,1}^m.
QrepReport verify_lemma_t(int n, int i, int m, int K);

}  // namespace lzb
