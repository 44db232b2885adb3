#include <sstream>
#include <stdexcept>

#include "lzb/afflattice.hpp"

namespace lzb {

int cartan_entry(int rank, int i, int j) {
    if (rank < 1 || i < 0 || j < 0 || i > rank || j > rank) throw std::out_of_range("cartan_entry index");
    if (i == j) return 2;
    if (rank == 1) return -2;
    const int d = ((i - j) % (rank + 1) + rank + 1) % (rank + 1);
    return (d == 1 || d == rank) ? -1 : 0;
}

namespace {
void check_rank(int a, int b) {
    if (a != b) throw std::invalid_argument("rank mismatch");
}
std::string coords_str(const std::vector<BigRat>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << "]";
    return os.str();
}
}  // namespace

AffineWeight AffineWeight::zero(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    return {rank, std::vector<BigRat>(static_cast<std::size_t>(rank) + 2, BigRat(0))};
}

AffineWeight AffineWeight::Lambda(int rank, int i) {
    AffineWeight w = zero(rank);
    w.coords.at(static_cast<std::size_t>(i)) = 1;
    return w;
}

AffineWeight AffineWeight::delta(int rank) {
    AffineWeight w = zero(rank);
    w.coords.back() = 1;
    return w;
}

AffineWeight AffineWeight::alpha(int rank, int i) {
    AffineWeight w = zero(rank);
    for (int j = 0; j <= rank; ++j) w.coords[static_cast<std::size_t>(j)] = cartan_entry(rank, j, i);
    if (i == 0) w.coords.back() = 1;
    return w;
}

AffineWeight AffineWeight::varpi(int rank, int i) { return Lambda(rank, i) - Lambda(rank, 0); }

BigRat AffineWeight::level() const {
    BigRat s = 0;
    for (int j = 0; j <= rank; ++j) s += coords[static_cast<std::size_t>(j)];
    return s;
}

bool AffineWeight::is_integral() const {
    for (const auto& c : coords)
        if (c.get_den() != 1) return false;
    return true;
}

AffineWeight AffineWeight::classical() const {
    AffineWeight w = *this;
    w.coords.back() = 0;
    return w;
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
    check_rank(rank, o.rank);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
    check_rank(rank, o.rank);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

AffineWeight operator*(const BigRat& s, AffineWeight a) {
    for (auto& c : a.coords) c *= s;
    return a;
}

std::string AffineWeight::to_string() const { return coords_str(coords); }

AffineCoweight AffineCoweight::zero(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    return {rank, std::vector<BigRat>(static_cast<std::size_t>(rank) + 2, BigRat(0))};
}

AffineCoweight AffineCoweight::coroot(int rank, int i) {
    AffineCoweight h = zero(rank);
    h.coords.at(static_cast<std::size_t>(i)) = 1;
    return h;
}

AffineCoweight AffineCoweight::d(int rank) {
    AffineCoweight h = zero(rank);
    h.coords.back() = 1;
    return h;
}

AffineCoweight AffineCoweight::c(int rank) {
    AffineCoweight h = zero(rank);
    for (int i = 0; i <= rank; ++i) h.coords[static_cast<std::size_t>(i)] = 1;
    return h;
}

AffineCoweight AffineCoweight::htilde(int rank) {
    AffineCoweight h = zero(rank);
    for (int i = 1; i <= rank; ++i) h.coords[static_cast<std::size_t>(i)] = i;
    return h;
}

AffineCoweight AffineCoweight::from_coroot_vector(int rank, const std::vector<int>& xi) {
    if (static_cast<int>(xi.size()) != rank) throw std::invalid_argument("coroot vector length must equal rank");
    AffineCoweight h = zero(rank);
    for (int i = 1; i <= rank; ++i) h.coords[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i - 1)];
    return h;
}

bool AffineCoweight::is_integral() const {
    for (const auto& c : coords)
        if (c.get_den() != 1) return false;
    return true;
}

AffineCoweight& AffineCoweight::operator+=(const AffineCoweight& o) {
    check_rank(rank, o.rank);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

AffineCoweight operator*(const BigRat& s, AffineCoweight a) {
    for (auto& c : a.coords) c *= s;
    return a;
}

std::string AffineCoweight::to_string() const { return coords_str(coords); }

BigRat pairing(const AffineCoweight& h, const AffineWeight& lam) {
    check_rank(h.rank, lam.rank);
    BigRat s = 0;
    for (std::size_t i = 0; i < h.coords.size(); ++i) s += h.coords[i] * lam.coords[i];
    return s;
}

AffineWeight simple_reflection(int i, const AffineWeight& lam) {
    const BigRat a = pairing(AffineCoweight::coroot(lam.rank, i), lam);
    if (sgn(a) == 0) return lam;
    return lam - a * AffineWeight::alpha(lam.rank, i);
}

AffineWeight apply_word(const std::vector<int>& word, const AffineWeight& lam) {
    AffineWeight r = lam;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = simple_reflection(*it, r);
    return r;
}

AffineWeight translate(const AffineCoweight& xi, const AffineWeight& lam) {
    check_rank(xi.rank, lam.rank);
    const int k = lam.rank;
    if (sgn(xi.coords[0]) != 0 || sgn(xi.coords.back()) != 0)
        throw std::invalid_argument("translation needs xi in the finite coroot lattice");
    const BigRat lev = lam.level();
    AffineWeight nu = AffineWeight::zero(k);
    BigRat form = 0;
    for (int i = 1; i <= k; ++i) {
        const BigRat& xi_i = xi.coords[static_cast<std::size_t>(i)];
        if (sgn(xi_i) == 0) continue;
        nu += xi_i * AffineWeight::alpha(k, i);
        for (int j = 1; j <= k; ++j) form += xi_i * xi.coords[static_cast<std::size_t>(j)] * cartan_entry(k, i, j);
    }
    AffineWeight r = lam + lev * nu;
    r.coords.back() -= pairing(xi, lam) + form * lev / 2;
    return r;
}

LevelZeroDominant::LevelZeroDominant(int rank_, std::vector<int> m_) : rank(rank_), m(std::move(m_)) {
    if (static_cast<int>(m.size()) != rank) throw std::invalid_argument("need one multiplicity per fundamental weight");
    for (int v : m)
        if (v < 0) throw std::invalid_argument("multiplicities must be nonnegative");
}

LevelZeroDominant LevelZeroDominant::fundamental_multiple(int rank, int i, int mult) {
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    v.at(static_cast<std::size_t>(i - 1)) = mult;
    return {rank, v};
}

Partition LevelZeroDominant::partition() const {
    std::vector<int> parts(static_cast<std::size_t>(rank), 0);
    int acc = 0;
    for (int i = rank; i >= 1; --i) {
        acc += m[static_cast<std::size_t>(i - 1)];
        parts[static_cast<std::size_t>(i - 1)] = acc;
    }
    return Partition(parts);
}

AffineWeight LevelZeroDominant::weight() const {
    AffineWeight w = AffineWeight::zero(rank);
    for (int i = 1; i <= rank; ++i) w += BigRat(m[static_cast<std::size_t>(i - 1)]) * AffineWeight::varpi(rank, i);
    return w;
}

int LevelZeroDominant::total() const {
    int s = 0;
    for (int v : m) s += v;
    return s;
}

std::string LevelZeroDominant::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s;
}

}  // namespace lzb
