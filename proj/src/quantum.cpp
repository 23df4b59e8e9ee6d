#include "schubert/quantum.hpp"

#include <algorithm>

namespace schubert {

int d_min(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const int n = lambda.ctx().n;
    int best = phi(lambda, 1) + phi(mu, -1);
    for (int i = 2; i <= n; ++i)
        best = std::min(best, phi(lambda, i) + phi(mu, -i));
    return -best;
}

int d_max(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const int n = lambda.ctx().n, w = lambda.ctx().width();
    int best = phi(lambda, -1) + phi(mu, 1 - w);
    for (int i = 2; i <= n; ++i)
        best = std::max(best, phi(lambda, -i) + phi(mu, i - w));
    return -best;
}

ExtremalData extremal_data(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const int n = lambda.ctx().n, w = lambda.ctx().width();
    const int dmin = d_min(lambda, mu), dmax = d_max(lambda, mu);
    int a = 0, b = 0;
    for (int i = 1; i <= n && (a == 0 || b == 0); ++i) {
        if (a == 0 && dmin + phi(lambda, i) + phi(mu, -i) == 0)
            a = i;
        if (b == 0 && dmax + phi(lambda, -i) + phi(mu, i - w) == 0)
            b = i;
    }
    if (a == 0 || b == 0 || dmin < 0 || dmin > dmax)
        throw internal_error("extremal_data: no witness index or inverted bounds for " +
                             to_string(lambda.partition()) + ", " + to_string(mu.partition()));
    return ExtremalData{dmin,
                        dmax,
                        a,
                        b,
                        cyclic_shift(lambda, a),
                        cyclic_shift(mu, -a),
                        cyclic_shift(complement(lambda), b),
                        cyclic_shift(complement(mu), w - b)};
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& nu, const RectContext& ctx) {
    if (nu.length() > static_cast<size_t>(ctx.k))
        throw std::invalid_argument("rim_hook_reduce: " + to_string(nu) + " has more than k=" +
                                    std::to_string(ctx.k) + " parts");
    std::vector<int> parts(nu.parts());
    int d = 0, sign = 1;
    while (!parts.empty() && parts[0] > ctx.width()) {
        // Walk the rim from (0, parts[0]-1) toward the SW, descending whenever
        // the cell below is present.
        size_t r = 0;
        int c = parts[0] - 1;
        for (int cells = 1; cells < ctx.n; ++cells) {
            if (r + 1 < parts.size() && parts[r + 1] > c)
                ++r;
            else if (c > 0)
                --c;
            else
                return std::nullopt; // rim exhausted before n cells
        }
        const int rows_occupied = static_cast<int>(r) + 1;
        std::vector<int> next(parts);
        for (size_t i = 0; i < r; ++i)
            next[i] = parts[i + 1] - 1;
        next[r] = c;
        if (r + 1 < parts.size() && next[r] < parts[r + 1])
            return std::nullopt; // removal leaves a non-partition
        while (!next.empty() && next.back() == 0)
            next.pop_back();
        parts = std::move(next);
        ++d;
        if ((ctx.k - rows_occupied) % 2 != 0)
            sign = -sign;
    }
    return RimHookReduction{d, sign, BoundedPartition(Partition(std::move(parts)), ctx)};
}

long long QuantumClassSum::coeff(int d, const Partition& nu) const {
    auto it = terms.find({d, nu});
    return it == terms.end() ? 0 : it->second;
}

QuantumClassSum quantum_product(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const RectContext ctx = lambda.ctx();
    QuantumClassSum sum{ctx, {}};
    const long long w = lambda.partition().weight() + mu.partition().weight();
    const int max_part = lambda.part(0) + mu.part(0);
    // Classical expansion over partitions with at most k rows, then reduce.
    for_each_partition(ctx.k, max_part, w, [&](const Partition& nu) {
        long long c = lr_coefficient(lambda.partition(), mu.partition(), nu);
        if (c == 0)
            return;
        auto red = rim_hook_reduce(nu, ctx);
        if (!red)
            return;
        auto key = std::make_pair(red->d, red->reduced.partition());
        auto [it, inserted] = sum.terms.try_emplace(key, 0);
        it->second = checked_add(it->second, checked_mul(red->sign, c));
        if (it->second == 0)
            sum.terms.erase(it);
    });
    for (const auto& [key, c] : sum.terms)
        if (c < 0)
            throw internal_error("quantum_product: negative coefficient " + std::to_string(c) +
                                 " at q^" + std::to_string(key.first) + " " +
                                 to_string(key.second));
    if (sum.terms.empty())
        throw internal_error("quantum_product: empty product for " +
                             to_string(lambda.partition()) + ", " + to_string(mu.partition()));
    return sum;
}

long long gw_invariant(const BoundedPartition& lambda, const BoundedPartition& mu,
                       const BoundedPartition& nu, int d) {
    if (d < 0)
        throw std::invalid_argument("gw_invariant: negative degree d=" + std::to_string(d));
    require_same_context(lambda, mu);
    require_same_context(lambda, nu);
    const RectContext ctx = lambda.ctx();
    if (lambda.partition().weight() + mu.partition().weight() !=
        nu.partition().weight() + static_cast<long long>(d) * ctx.n)
        return 0;
    const long long oracle = quantum_product(lambda, mu).coeff(d, nu.partition());
    const ExtremalData ex = extremal_data(lambda, mu);
    if (d == ex.d_min) {
        long long via_rotation =
            lr_coefficient(ex.lambda_min.partition(), ex.mu_min.partition(), nu.partition());
        if (via_rotation != oracle)
            throw internal_error("gw_invariant: rotation rule and rim-hook oracle disagree at "
                                 "d_min for " +
                                 to_string(lambda.partition()) + ", " + to_string(mu.partition()) +
                                 ", " + to_string(nu.partition()));
        return via_rotation;
    }
    if (d == ex.d_max) {
        long long via_rotation = lr_coefficient(ex.lambda_max.partition(), ex.mu_max.partition(),
                                                complement(nu).partition());
        if (via_rotation != oracle)
            throw internal_error("gw_invariant: rotation rule and rim-hook oracle disagree at "
                                 "d_max for " +
                                 to_string(lambda.partition()) + ", " + to_string(mu.partition()) +
                                 ", " + to_string(nu.partition()));
        return via_rotation;
    }
    return oracle;
}

std::set<int> q_support(const BoundedPartition& lambda, const BoundedPartition& mu) {
    std::set<int> support;
    for (const auto& [key, c] : quantum_product(lambda, mu).terms)
        support.insert(key.first);
    return support;
}

} // namespace schubert
