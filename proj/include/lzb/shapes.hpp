// Partitions, horizontal strips and Gaussian binomials.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lzb/exactring.hpp"

namespace lzb {

class Partition {
public:
    Partition() = default;
    /// Accepts trailing zeros; throws on negative or increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part, zero beyond the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    /// "(2,1)"; the empty partition prints as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

struct SkewPair {
    Partition outer;
    Partition inner;
};

bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// All M with length <= max_len and outer/M a horizontal strip, lexicographically decreasing.
std::vector<Partition> horizontal_strips(const Partition& outer, int max_len);

/// Gaussian binomial (m over r)_q.
LaurentQ q_binomial(int m, int r);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
/// All partitions of n with at most k parts.
std::vector<Partition> partitions_of(int n, int max_len);

}  // namespace lzb
