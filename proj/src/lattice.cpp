#include "ctrust/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ctrust {

DominanceRelation compare(const AttributeVector& a, const AttributeVector& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("attribute vectors of different dimension");
    bool a_ge = true, b_ge = true, a_gt = false, b_gt = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) { a_ge = false; b_gt = true; }
        if (a[i] > b[i]) { b_ge = false; a_gt = true; }
    }
    if (a_ge && b_ge) return DominanceRelation::Equal;
    if (a_ge && a_gt) return DominanceRelation::StrictlyBetter;
    if (b_ge && b_gt) return DominanceRelation::StrictlyWorse;
    return DominanceRelation::Incomparable;
}

bool PartialOrder::strictly_dominates(int a, int b) const {
    // cover edges are the transitive reduction; dominance is reachability
    std::vector<bool> seen(n, false);
    std::vector<int> stack{a};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const auto& [from, to] : cover_edges)
            if (from == cur && !seen[to]) {
                if (to == b) return true;
                seen[to] = true;
                stack.push_back(to);
            }
    }
    return false;
}

PartialOrder build_partial_order(const std::vector<AutonomousSystem>& systems) {
    if (systems.empty()) throw EmptyInput("no systems");
    const std::size_t n = systems.size();

    std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            auto rel = compare(systems[a].attributes, systems[b].attributes);
            if (rel == DominanceRelation::StrictlyBetter) dom[a][b] = true;
            if (rel == DominanceRelation::Equal) eq[a][b] = true;
        }

    PartialOrder po;
    po.n = n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!dom[a][b]) continue;
            bool implied = false;
            for (std::size_t c = 0; c < n && !implied; ++c)
                if (dom[a][c] && dom[c][b]) implied = true;
            if (!implied)
                po.cover_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }

    // depth rank: longest chain of strict dominators, memoized
    po.depth_rank.assign(n, 0);
    std::function<int(std::size_t)> rank = [&](std::size_t v) -> int {
        if (po.depth_rank[v] != 0) return po.depth_rank[v];
        int best = 1;
        for (std::size_t u = 0; u < n; ++u)
            if (dom[u][v]) best = std::max(best, rank(u) + 1);
        return po.depth_rank[v] = best;
    };
    for (std::size_t v = 0; v < n; ++v) rank(v);

    auto [join, meet] = join_meet(systems);
    po.join = std::move(join);
    po.meet = std::move(meet);

    po.precedes.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            po.precedes[a][b] = dom[a][b] || (eq[a][b] && a < b);

    return po;
}

std::pair<AttributeVector, AttributeVector>
join_meet(const std::vector<AutonomousSystem>& systems) {
    if (systems.empty()) throw EmptyInput("no systems");
    AttributeVector join = systems.front().attributes;
    AttributeVector meet = systems.front().attributes;
    for (const auto& s : systems) {
        if (s.attributes.dim() != join.dim())
            throw DimensionMismatch("attribute vectors of different dimension");
        for (std::size_t i = 0; i < join.dim(); ++i) {
            join.values[i] = std::max(join.values[i], s.attributes[i]);
            meet.values[i] = std::min(meet.values[i], s.attributes[i]);
        }
    }
    return {join, meet};
}

std::vector<TotalOrder> linear_extensions(const PartialOrder& po, std::size_t limit) {
    std::vector<TotalOrder> out;
    if (limit == 0) return out;
    const std::size_t n = po.n;
    std::vector<bool> placed(n, false);
    std::vector<int> seq;
    seq.reserve(n);

    std::function<bool()> rec = [&]() -> bool {
        if (seq.size() == n) {
            out.push_back(TotalOrder{seq});
            return out.size() >= limit;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (placed[c]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < n && ready; ++j)
                if (!placed[j] && po.precedes[j][c]) ready = false;
            if (!ready) continue;
            placed[c] = true;
            seq.push_back(static_cast<int>(c));
            bool done = rec();
            seq.pop_back();
            placed[c] = false;
            if (done) return true;
        }
        return false;
    };
    rec();
    return out;
}

TotalOrder default_order(const std::vector<AutonomousSystem>& systems) {
    if (systems.empty()) throw EmptyInput("no systems");
    std::vector<int> seq(systems.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        double ma = std::accumulate(systems[a].attributes.values.begin(),
                                    systems[a].attributes.values.end(), 0.0);
        double mb = std::accumulate(systems[b].attributes.values.begin(),
                                    systems[b].attributes.values.end(), 0.0);
        if (ma != mb) return ma > mb;
        return a < b;
    });
    return TotalOrder{std::move(seq)};
}

} // namespace ctrust
