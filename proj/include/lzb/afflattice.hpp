// Affine root datum of type A_k^(1): weights in the (Lambda_0..Lambda_k, delta)
// basis, coweights in the (alpha_0^v..alpha_k^v, d) basis, the affine Weyl group
// W_0 x Q_0^v, and the maps relating rank n-1 and rank n data.
#pragma once

#include <string>
#include <vector>

#include "lzb/exactring.hpp"
#include "lzb/shapes.hpp"

namespace lzb {

/// a_{ij} for the affine Cartan matrix of rank k (nodes 0..k).
int cartan_entry(int rank, int i, int j);

struct AffineWeight {
    int rank = 1;
    std::vector<BigRat> coords;  // Lambda_0..Lambda_rank, delta

    static AffineWeight zero(int rank);
    static AffineWeight Lambda(int rank, int i);
    static AffineWeight delta(int rank);
    static AffineWeight alpha(int rank, int i);
    /// varpi_i = Lambda_i - Lambda_0
    static AffineWeight varpi(int rank, int i);

    const BigRat& lambda_coord(int i) const { return coords.at(static_cast<std::size_t>(i)); }
    const BigRat& delta_coord() const { return coords.back(); }
    BigRat level() const;
    bool is_integral() const;
    AffineWeight classical() const;  // drop delta

    AffineWeight& operator+=(const AffineWeight& o);
    AffineWeight& operator-=(const AffineWeight& o);
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    friend AffineWeight operator*(const BigRat& s, AffineWeight a);
    friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
        return a.rank == b.rank && a.coords == b.coords;
    }
    friend bool operator!=(const AffineWeight& a, const AffineWeight& b) { return !(a == b); }
    std::string to_string() const;
};

struct AffineCoweight {
    int rank = 1;
    std::vector<BigRat> coords;  // alpha_0^v..alpha_rank^v, d

    static AffineCoweight zero(int rank);
    static AffineCoweight coroot(int rank, int i);
    static AffineCoweight d(int rank);
    /// c = sum_i alpha_i^v
    static AffineCoweight c(int rank);
    /// h~ = sum_{i=1}^{rank} i alpha_i^v
    static AffineCoweight htilde(int rank);
    /// sum_{i>=1} xi_i alpha_i^v
    static AffineCoweight from_coroot_vector(int rank, const std::vector<int>& xi);

    bool is_integral() const;
    AffineCoweight& operator+=(const AffineCoweight& o);
    friend AffineCoweight operator+(AffineCoweight a, const AffineCoweight& b) { return a += b; }
    friend AffineCoweight operator*(const BigRat& s, AffineCoweight a);
    friend bool operator==(const AffineCoweight& a, const AffineCoweight& b) {
        return a.rank == b.rank && a.coords == b.coords;
    }
    std::string to_string() const;
};

BigRat pairing(const AffineCoweight& h, const AffineWeight& lam);
AffineWeight simple_reflection(int i, const AffineWeight& lam);
AffineWeight apply_word(const std::vector<int>& word, const AffineWeight& lam);

/// t_xi(lam) = lam + <lam,c> nu(xi) - (<lam,xi> + (xi,xi)<lam,c>/2) delta
AffineWeight translate(const AffineCoweight& xi, const AffineWeight& lam);

/// x = w t_xi with w a permutation of {1..rank+1} (perm[a-1] = w(a)).
struct AffineWeylElt {
    int rank = 1;
    std::vector<int> perm;
    std::vector<int> xi;  // coroot coordinates xi_1..xi_rank

    static AffineWeylElt identity(int rank);
    static AffineWeylElt simple(int rank, int i);
    static AffineWeylElt translation(int rank, const std::vector<int>& xi);
    static AffineWeylElt from_word(int rank, const std::vector<int>& word);

    friend AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b);
    friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
        return a.rank == b.rank && a.perm == b.perm && a.xi == b.xi;
    }
    std::string to_string() const;
};

AffineWeight weyl_act(const AffineWeylElt& x, const AffineWeight& lam);
/// Reduced expression read left to right, found by stripping right descents.
std::vector<int> reduced_word(const AffineWeylElt& x);
int inversions(const std::vector<int>& perm);
int ell_semi_infinite(const AffineWeylElt& x);
/// True for real roots beta + k delta with k > 0, or k = 0 and beta positive.
bool is_positive_real_root(const AffineWeight& beta);

/// Unique phi supported on J with xi + phi J-adjusted. J holds indices in 1..rank.
std::vector<int> phi_J(int rank, const std::vector<int>& xi, const std::vector<int>& J);

/// j: coweights of rank n-1 -> rank n.
AffineCoweight map_j(const AffineCoweight& h);
/// j*: weights of rank n -> rank n-1.
AffineWeight map_jstar(const AffineWeight& lam);
/// gamma: root lattice of rank n-1 -> rank n.
AffineWeight map_gamma(const AffineWeight& zeta);
/// Coordinates z_0..z_k with zeta = sum z_i alpha_i; throws if zeta is not in the root span.
std::vector<BigRat> root_coordinates(const AffineWeight& zeta);
/// omega on words: s_0 -> s_n s_0 s_n, s_i -> s_i; n = rank of the target.
std::vector<int> omega(const std::vector<int>& word, int n);
/// w_i = s_n s_{n-1} ... s_i
std::vector<int> w_word(int n, int i);

struct LevelZeroDominant {
    int rank = 1;
    std::vector<int> m;  // m_1..m_rank

    LevelZeroDominant() = default;
    LevelZeroDominant(int rank, std::vector<int> m);
    static LevelZeroDominant fundamental_multiple(int rank, int i, int m);

    /// (m_1+...+m_k, m_2+...+m_k, ..., m_k)
    Partition partition() const;
    AffineWeight weight() const;
    int total() const;
    std::string to_string() const;
};

}  // namespace lzb
