#include "schubert/lr.hpp"

#include <algorithm>

namespace schubert {

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(inner, outer))
        throw std::invalid_argument("SkewShape: inner " + to_string(inner) +
                                    " not contained in outer " + to_string(outer));
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.outer.length())
        throw std::invalid_argument("SkewTableau: row count mismatch");
    for (size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].size() != static_cast<size_t>(row_end(r) - row_begin(r)))
            throw std::invalid_argument("SkewTableau: row " + std::to_string(r) +
                                        " length mismatch");
}

bool SkewTableau::is_semistandard() const {
    for (size_t r = 0; r < n_rows(); ++r) {
        for (int c = row_begin(r); c < row_end(r); ++c) {
            if (at(r, c) < 1)
                return false;
            if (c + 1 < row_end(r) && at(r, c) > at(r, c + 1))
                return false;
            if (r > 0 && c >= row_begin(r - 1) && c < row_end(r - 1) &&
                at(r - 1, c) >= at(r, c))
                return false;
        }
    }
    return true;
}

std::vector<int> reading_word(const SkewTableau& t) {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(t.shape().cell_count()));
    for (size_t r = 0; r < t.n_rows(); ++r)
        for (int c = t.row_end(r) - 1; c >= t.row_begin(r); --c)
            word.push_back(t.at(r, c));
    return word;
}

bool is_yamanouchi(const std::vector<int>& word, const Partition& mu) {
    std::vector<long long> count(mu.length() + 2, 0);
    for (int v : word) {
        if (v < 1 || static_cast<size_t>(v) > mu.length())
            return false;
        ++count[v];
        if (v > 1 && count[v] > count[v - 1])
            return false;
    }
    for (size_t i = 0; i < mu.length(); ++i)
        if (count[i + 1] != mu.parts()[i])
            return false;
    return true;
}

bool is_lr_filling(const SkewTableau& t, const Partition& mu) {
    return t.is_semistandard() && is_yamanouchi(reading_word(t), mu);
}

namespace {

// Cells are filled in reading order (top row first, right to left), so the
// Yamanouchi prefix condition and semistandardness can be checked as each
// entry is placed.
struct FillingWalker {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<int>> rows;
    std::vector<long long> count; // count[v] = number of v's placed, 1-based
    const std::function<bool(const SkewTableau&)>& visit;
    bool stopped = false;

    int entry(size_t r, int c) const { return rows[r][c - lambda.part(r)]; }

    bool run() {
        rows.resize(nu.length());
        for (size_t r = 0; r < nu.length(); ++r)
            rows[r].assign(nu.parts()[r] - lambda.part(r), 0);
        count.assign(mu.length() + 1, 0);
        fill_row(0);
        return !stopped;
    }

    void fill_row(size_t r) {
        if (stopped)
            return;
        if (r == nu.length()) {
            SkewTableau t(SkewShape(nu, lambda), rows);
            if (!visit(t))
                stopped = true;
            return;
        }
        fill_cell(r, nu.parts()[r] - 1);
    }

    void fill_cell(size_t r, int c) {
        if (c < lambda.part(r)) {
            fill_row(r + 1);
            return;
        }
        const int max_v = static_cast<int>(mu.length());
        int hi = max_v;
        if (c + 1 < nu.parts()[r])
            hi = std::min(hi, entry(r, c + 1));
        int lo = 1;
        if (r > 0 && c >= lambda.part(r - 1))
            lo = std::max(lo, entry(r - 1, c) + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= mu.parts()[v - 1])
                continue;
            if (v > 1 && count[v] >= count[v - 1])
                continue;
            rows[r][c - lambda.part(r)] = v;
            ++count[v];
            fill_cell(r, c - 1);
            --count[v];
            rows[r][c - lambda.part(r)] = 0;
            if (stopped)
                return;
        }
    }
};

void enumerate_partitions_rec(int rows_left, int max_part, long long target,
                              std::vector<int>& current,
                              const std::function<void(const Partition&)>& emit) {
    if (target == 0) {
        emit(Partition(std::vector<int>(current)));
        return;
    }
    if (rows_left == 0)
        return;
    int hi = static_cast<int>(std::min<long long>(max_part, target));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * rows_left < target)
            break;
        current.push_back(p);
        enumerate_partitions_rec(rows_left - 1, p, target - p, current, emit);
        current.pop_back();
    }
}

} // namespace

void for_each_partition(int max_rows, int max_part, long long weight,
                        const std::function<void(const Partition&)>& emit) {
    std::vector<int> current;
    enumerate_partitions_rec(max_rows, max_part, weight, current, emit);
}

void for_each_lr_filling(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const std::function<bool(const SkewTableau&)>& visit) {
    if (!contains(lambda, nu))
        return;
    if (lambda.weight() + mu.weight() != nu.weight())
        return;
    FillingWalker walker{lambda, mu, nu, {}, {}, visit};
    walker.run();
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    long long count = 0;
    for_each_lr_filling(lambda, mu, nu, [&](const SkewTableau&) {
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

std::vector<SkewTableau> lr_fillings(const Partition& lambda, const Partition& mu,
                                     const Partition& nu) {
    std::vector<SkewTableau> out;
    for_each_lr_filling(lambda, mu, nu, [&](const SkewTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

void ClassSum::add(const Partition& p, long long c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(p, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0)
        terms.erase(it);
}

long long ClassSum::coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? 0 : it->second;
}

ClassSum schubert_product(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const RectContext ctx = lambda.ctx();
    ClassSum sum{ctx, {}};
    const long long w = lambda.partition().weight() + mu.partition().weight();
    if (w > static_cast<long long>(ctx.k) * ctx.width())
        return sum;
    for_each_partition(ctx.k, ctx.width(), w, [&](const Partition& nu) {
        if (!contains(lambda.partition(), nu) || !contains(mu.partition(), nu))
            return;
        sum.add(nu, lr_coefficient(lambda.partition(), mu.partition(), nu));
    });
    return sum;
}

namespace {

void pieri_rec(const BoundedPartition& lambda, int row, int boxes_left, std::vector<int>& parts,
               ClassSum& sum) {
    const int k = lambda.ctx().k;
    if (row == k) {
        if (boxes_left == 0)
            sum.add(Partition(std::vector<int>(parts)), 1);
        return;
    }
    const int lo = lambda.part(row);
    // At most one new box per column: row r may not grow past row r-1 of lambda.
    const int cap = row == 0 ? lambda.ctx().width() : lambda.part(row - 1);
    for (int v = lo; v <= std::min(cap, lo + boxes_left); ++v) {
        parts.push_back(v);
        pieri_rec(lambda, row + 1, boxes_left - (v - lo), parts, sum);
        parts.pop_back();
    }
}

} // namespace

ClassSum pieri_row(const BoundedPartition& lambda, int p) {
    if (p < 0 || p > lambda.ctx().width())
        throw std::invalid_argument("pieri_row: p=" + std::to_string(p) + " outside [0, " +
                                    std::to_string(lambda.ctx().width()) + "]");
    ClassSum sum{lambda.ctx(), {}};
    std::vector<int> parts;
    pieri_rec(lambda, 0, p, parts, sum);
    return sum;
}

long long point_pairing(const BoundedPartition& lambda, const BoundedPartition& mu,
                        const BoundedPartition& nu) {
    require_same_context(lambda, mu);
    require_same_context(lambda, nu);
    return lr_coefficient(lambda.partition(), mu.partition(), complement(nu).partition());
}

} // namespace schubert
