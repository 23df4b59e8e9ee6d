#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

// Partitions inside a k-by-(n-k) rectangle and the border-path encodings
// used throughout the Grassmannian calculus: 01-words, prefix-sum sequences,
// complement, conjugate and cyclic rotation.

namespace schubert {

// Raised when two independent computation routes disagree; callers treat it
// as a bug, not a math result.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

/// The pair (k, n) fixing Gr_k(C^n) and its k x (n-k) rectangle.
struct RectContext {
    int k = 0;
    int n = 0;

    int width() const { return n - k; }
    bool operator==(const RectContext&) const = default;
};

/// Validates 1 <= k < n.
RectContext make_context(int k, int n);

/// Weakly decreasing nonnegative parts, stored without trailing zeros.
/// The empty partition is Partition{}.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 0-based; parts beyond length() read as 0.
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on parts; equals lex order on zero-padded parts.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
bool contains(const Partition& inner, const Partition& outer);
std::string to_string(const Partition& p);

/// A partition known to fit inside ctx's rectangle.
class BoundedPartition {
public:
    BoundedPartition(Partition p, RectContext ctx);

    const Partition& partition() const { return p_; }
    const RectContext& ctx() const { return ctx_; }
    int part(size_t i) const { return p_.part(i); }

    bool operator==(const BoundedPartition&) const = default;

private:
    Partition p_;
    RectContext ctx_;
};

/// Border path of a bounded partition, SW corner to NE corner:
/// 0 = step right, 1 = step up.  Always n bits with exactly k ones.
struct Word01 {
    std::vector<int> bits;

    bool operator==(const Word01&) const = default;
};

// The 1s of word_of(p) sit at positions p_{k+1-m} + m (1-based), m = 1..k.
Word01 word_of(const BoundedPartition& p);
BoundedPartition partition_of(const Word01& w, const RectContext& ctx);

/// phi_i = omega_1 + ... + omega_i for 1 <= i <= n, phi_0 = 0, extended to
/// all integers by phi_{i+n} = phi_i + k.
int phi(const BoundedPartition& p, long long i);

/// S^i: partition whose 01-word is word_of(p) cyclically shifted i places
/// left.  S^i(empty) is generally not empty; the word rotation is the sole
/// definition.
BoundedPartition cyclic_shift(const BoundedPartition& p, long long i);

BoundedPartition complement(const BoundedPartition& p);

/// True iff p_i + q_{k+1-i} <= n-k for all i, i.e. the 180-degree rotation
/// of q fits beside p; equivalently the classical product is nonzero.
bool is_nonoverlapping(const BoundedPartition& p, const BoundedPartition& q);

void require_same_context(const BoundedPartition& a, const BoundedPartition& b);

} // namespace schubert
