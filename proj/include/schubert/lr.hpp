#pragma once

#include <functional>
#include <map>
#include <vector>

#include "schubert/core.hpp"

// Littlewood-Richardson coefficients by explicit enumeration of fillings,
// classical Schubert products, the Pieri rule and the point-class pairing.

namespace schubert {

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    long long cell_count() const { return outer.weight() - inner.weight(); }

    bool operator==(const SkewShape&) const = default;
};

/// Filling of a skew shape with positive integers.  Row r holds entries for
/// columns inner_r .. outer_r - 1 (0-based).
class SkewTableau {
public:
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    size_t n_rows() const { return shape_.outer.length(); }
    int row_begin(size_t r) const { return shape_.inner.part(r); }
    int row_end(size_t r) const { return shape_.outer.part(r); }
    int at(size_t r, int c) const { return rows_[r][c - row_begin(r)]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Rows weakly increase; columns strictly increase.
    bool is_semistandard() const;

    bool operator==(const SkewTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Entries right to left along each row, top row first.
std::vector<int> reading_word(const SkewTableau& t);

/// Every prefix has #1s >= #2s >= ...; total content equals mu.
bool is_yamanouchi(const std::vector<int>& word, const Partition& mu);

/// Semistandard with Yamanouchi reading word of content mu.
bool is_lr_filling(const SkewTableau& t, const Partition& mu);

/// Number of LR fillings of nu/lambda with content mu.  Partitions need not
/// fit any rectangle; only the row counts are finite.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Visits every LR filling; stop early by returning false from the visitor.
void for_each_lr_filling(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const std::function<bool(const SkewTableau&)>& visit);

std::vector<SkewTableau> lr_fillings(const Partition& lambda, const Partition& mu,
                                     const Partition& nu);

/// Integer combination of Schubert classes of one Grassmannian.
struct ClassSum {
    RectContext ctx;
    std::map<Partition, long long> terms;

    void add(const Partition& p, long long c);
    long long coeff(const Partition& p) const;
};

ClassSum schubert_product(const BoundedPartition& lambda, const BoundedPartition& mu);

/// Adds a horizontal strip of p boxes inside the rectangle, all coefficients 1.
ClassSum pieri_row(const BoundedPartition& lambda, int p);

/// Coefficient of the point class in sigma_lambda . sigma_mu . sigma_nu,
/// i.e. c_{lambda,mu}^{nu complement}.
long long point_pairing(const BoundedPartition& lambda, const BoundedPartition& mu,
                        const BoundedPartition& nu);

/// Visits every partition of the given weight with at most max_rows parts,
/// each at most max_part, in decreasing lexicographic order.
void for_each_partition(int max_rows, int max_part, long long weight,
                        const std::function<void(const Partition&)>& emit);

} // namespace schubert
