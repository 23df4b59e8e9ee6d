#include "schubert/core.hpp"

#include <algorithm>
#include <numeric>

namespace schubert {

RectContext make_context(int k, int n) {
    if (k < 1)
        throw std::invalid_argument("make_context: k must be >= 1, got " + std::to_string(k));
    if (k >= n)
        throw std::invalid_argument("make_context: k must be < n, got k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n));
    return RectContext{k, n};
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return Partition{};
    std::vector<int> cols(p.parts()[0], 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

bool contains(const Partition& inner, const Partition& outer) {
    for (size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.length(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

BoundedPartition::BoundedPartition(Partition p, RectContext ctx) : p_(std::move(p)), ctx_(ctx) {
    if (p_.length() > static_cast<size_t>(ctx_.k))
        throw std::invalid_argument("BoundedPartition: more than k=" + std::to_string(ctx_.k) +
                                    " parts in " + to_string(p_));
    if (!p_.empty() && p_.parts()[0] > ctx_.width())
        throw std::invalid_argument("BoundedPartition: part exceeds n-k=" +
                                    std::to_string(ctx_.width()) + " in " + to_string(p_));
}

void require_same_context(const BoundedPartition& a, const BoundedPartition& b) {
    if (!(a.ctx() == b.ctx()))
        throw std::invalid_argument("context mismatch: (" + std::to_string(a.ctx().k) + "," +
                                    std::to_string(a.ctx().n) + ") vs (" +
                                    std::to_string(b.ctx().k) + "," + std::to_string(b.ctx().n) +
                                    ")");
}

Word01 word_of(const BoundedPartition& p) {
    const int k = p.ctx().k, n = p.ctx().n;
    Word01 w;
    w.bits.assign(n, 0);
    for (int m = 1; m <= k; ++m)
        w.bits[p.part(k - m) + m - 1] = 1;
    return w;
}

BoundedPartition partition_of(const Word01& w, const RectContext& ctx) {
    if (w.bits.size() != static_cast<size_t>(ctx.n))
        throw std::invalid_argument("partition_of: word length " + std::to_string(w.bits.size()) +
                                    " != n=" + std::to_string(ctx.n));
    std::vector<int> ones;
    for (int i = 0; i < ctx.n; ++i) {
        if (w.bits[i] != 0 && w.bits[i] != 1)
            throw std::invalid_argument("partition_of: word entries must be 0 or 1");
        if (w.bits[i] == 1)
            ones.push_back(i + 1);
    }
    if (ones.size() != static_cast<size_t>(ctx.k))
        throw std::invalid_argument("partition_of: word has " + std::to_string(ones.size()) +
                                    " ones, expected k=" + std::to_string(ctx.k));
    std::vector<int> parts(ctx.k, 0);
    for (int m = 1; m <= ctx.k; ++m)
        parts[ctx.k - m] = ones[m - 1] - m;
    return BoundedPartition(Partition(std::move(parts)), ctx);
}

int phi(const BoundedPartition& p, long long i) {
    const int k = p.ctx().k, n = p.ctx().n;
    long long q = i >= 0 ? i / n : -((-i + n - 1) / n);
    int r = static_cast<int>(i - q * n); // 0 <= r < n
    const Word01 w = word_of(p);
    int sum = 0;
    for (int j = 0; j < r; ++j)
        sum += w.bits[j];
    return static_cast<int>(sum + q * k);
}

BoundedPartition cyclic_shift(const BoundedPartition& p, long long i) {
    const int n = p.ctx().n;
    int r = static_cast<int>(((i % n) + n) % n);
    const Word01 w = word_of(p);
    Word01 shifted;
    shifted.bits.resize(n);
    for (int j = 0; j < n; ++j)
        shifted.bits[j] = w.bits[(j + r) % n];
    return partition_of(shifted, p.ctx());
}

BoundedPartition complement(const BoundedPartition& p) {
    const int k = p.ctx().k, w = p.ctx().width();
    std::vector<int> parts(k);
    for (int i = 0; i < k; ++i)
        parts[i] = w - p.part(k - 1 - i);
    return BoundedPartition(Partition(std::move(parts)), p.ctx());
}

bool is_nonoverlapping(const BoundedPartition& p, const BoundedPartition& q) {
    require_same_context(p, q);
    const int k = p.ctx().k, w = p.ctx().width();
    for (int i = 0; i < k; ++i)
        if (p.part(i) + q.part(k - 1 - i) > w)
            return false;
    return true;
}

} // namespace schubert
