#include "powercolor/choosability.hpp"

#include <algorithm>

#include "powercolor/coloring.hpp"

namespace powercolor {

namespace {

// Available colors of an uncolored vertex: list entries not taken by a
// colored neighbor.
std::vector<int> available_colors(const Graph& g, const std::vector<std::vector<int>>& lists,
                                  const std::vector<int>& color, int v) {
    std::vector<int> avail;
    for (int c : lists[v]) {
        bool blocked = false;
        for (int u : g.neighbors(v))
            if (color[u] == c) {
                blocked = true;
                break;
            }
        if (!blocked) avail.push_back(c);
    }
    return avail;
}

bool extend_list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists,
                          std::vector<int>& color) {
    // Most-constrained vertex first; a vertex with empty availability fails
    // the whole branch immediately.
    int best = -1;
    std::vector<int> best_avail;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (color[v] != -1) continue;
        std::vector<int> avail = available_colors(g, lists, color, v);
        if (best == -1 || avail.size() < best_avail.size()) {
            best = v;
            best_avail = std::move(avail);
            if (best_avail.empty()) return false;
        }
    }
    if (best == -1) return true;
    for (int c : best_avail) {
        color[best] = c;
        if (extend_list_coloring(g, lists, color)) return true;
        color[best] = -1;
    }
    return false;
}

}  // namespace

bool has_proper_list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists) {
    std::vector<int> color(g.vertex_count(), -1);
    return extend_list_coloring(g, lists, color);
}

long long count_list_colorings_product(const Graph& g,
                                       const std::vector<std::vector<int>>& lists,
                                       long long cap) {
    const int n = g.vertex_count();
    long long total = 1;
    for (const auto& list : lists) {
        if (list.empty()) return 0;
        total *= static_cast<long long>(list.size());
        if (total > cap)
            throw BudgetExceededError("list product exceeds cap of " + std::to_string(cap));
    }
    long long proper = 0;
    std::vector<size_t> pick(n, 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            for (int u : g.neighbors(v)) {
                if (u > v) break;  // neighbors sorted; check each edge once
                if (lists[v][pick[v]] == lists[u][pick[u]]) {
                    ok = false;
                    break;
                }
            }
        if (ok) ++proper;
        int v = n - 1;
        while (v >= 0 && pick[v] + 1 == lists[v].size()) pick[v--] = 0;
        if (v < 0) break;
        ++pick[v];
    }
    return proper;
}

namespace {

// Symmetry-reduced enumeration of list assignments. Any assignment can be
// relabeled so that colors appear in first-use order along the vertex
// sequence; enumerating only those forms visits every orbit. New colors at a
// vertex are therefore always the next unused indices, and the whole
// enumeration is split into rounds by the exact number of distinct colors
// used, so sparse-palette assignments (where bad assignments live) are
// tried first.
struct AssignmentSearch {
    const Graph& g;
    int n, t;
    int color_budget = 0;  // exact number of distinct colors this round
    long long effort_limit;
    long long tested = 0;
    bool out_of_effort = false;
    std::vector<std::vector<int>> lists;
    std::vector<std::vector<int>> witness;

    AssignmentSearch(const Graph& graph, int list_size, long long effort)
        : g(graph),
          n(graph.vertex_count()),
          t(list_size),
          effort_limit(effort),
          lists(graph.vertex_count()) {}

    bool found_witness() const { return !witness.empty(); }

    // Enumerates lists for vertex v given `used` colors so far; returns true
    // when a witness has been found (stops the search).
    bool assign(int v, int used) {
        if (out_of_effort) return false;
        if (v == n) {
            if (used != color_budget) return false;  // belongs to another round
            if (tested >= effort_limit) {
                out_of_effort = true;
                return false;
            }
            ++tested;
            if (!has_proper_list_coloring(g, lists)) {
                witness = lists;
                return true;
            }
            return false;
        }
        // Even t fresh colors at every remaining vertex cannot reach the
        // budget: prune.
        if (used + static_cast<long long>(n - v) * t < color_budget) return false;

        const int max_new = std::min(t, color_budget - used);
        for (int fresh = 0; fresh <= max_new; ++fresh) {
            const int old_needed = t - fresh;
            if (old_needed > used) continue;
            // Choose old_needed existing colors, lexicographically.
            std::vector<int> comb(old_needed);
            for (int i = 0; i < old_needed; ++i) comb[i] = i;
            while (true) {
                lists[v].clear();
                lists[v].insert(lists[v].end(), comb.begin(), comb.end());
                for (int i = 0; i < fresh; ++i) lists[v].push_back(used + i);
                if (assign(v + 1, used + fresh)) return true;
                if (out_of_effort) return false;
                // Next combination of old colors.
                int i = old_needed - 1;
                while (i >= 0 && comb[i] == used - old_needed + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < old_needed; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        return false;
    }
};

}  // namespace

ChoosabilityResult choosable(const Graph& g, int t, long long effort) {
    ChoosabilityResult result;
    result.t = t;
    result.universe_size = t * g.vertex_count();
    if (t < 1) {
        result.verdict = g.vertex_count() == 0 ? ChoosableVerdict::Choosable
                                               : ChoosableVerdict::NotChoosable;
        result.witness.assign(g.vertex_count(), {});
        return result;
    }
    if (g.vertex_count() == 0) {
        result.verdict = ChoosableVerdict::Choosable;
        return result;
    }

    AssignmentSearch search(g, t, effort);
    for (int budget = t; budget <= result.universe_size; ++budget) {
        search.color_budget = budget;
        if (search.assign(0, 0)) {
            result.verdict = ChoosableVerdict::NotChoosable;
            result.witness = search.witness;
            for (auto& list : result.witness) std::sort(list.begin(), list.end());
            result.assignments_tested = search.tested;
            return result;
        }
        if (search.out_of_effort) {
            result.verdict = ChoosableVerdict::Unknown;
            result.assignments_tested = search.tested;
            return result;
        }
    }
    result.verdict = ChoosableVerdict::Choosable;
    result.assignments_tested = search.tested;
    return result;
}

ChoiceBounds choice_number_bounds(const Graph& g, long long effort, int chi_budget) {
    ChoiceBounds bounds;
    bounds.upper = 1 + degeneracy_order(g).degeneracy;
    bounds.lower = g.vertex_count() == 0 ? 0 : 1;
    if (g.vertex_count() <= chi_budget) bounds.lower = chromatic_exact(g, chi_budget);
    for (int t = bounds.lower; t < bounds.upper; ++t) {
        ChoosabilityResult r = choosable(g, t, effort);
        if (r.verdict == ChoosableVerdict::NotChoosable) {
            bounds.lower = t + 1;
        } else if (r.verdict == ChoosableVerdict::Choosable) {
            bounds.upper = t;
            break;
        } else {
            break;
        }
    }
    bounds.exact = bounds.lower == bounds.upper;
    return bounds;
}

}  // namespace powercolor
