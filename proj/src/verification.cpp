#include "powercolor/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <tuple>

#include "powercolor/coloring.hpp"
#include "powercolor/parallel.hpp"

namespace powercolor {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string pair_witness(const std::string& tag, int u, int v, int dist) {
    std::ostringstream s;
    s << "part " << tag << " vertices " << u + 1 << " " << v + 1 << " at distance "
      << (dist < 0 ? std::string(">4k") : std::to_string(dist));
    return s.str();
}

std::string construction_params(const ConstructionGraph& G) {
    return "q=" + std::to_string(G.n) + " k=" + std::to_string(G.k);
}

struct IntraConflict {
    int u, v, dist;
    std::string tag;
};

// Intra-part violations: pairs in one part at distance <= 4k. Enumeration
// fans out one worker slot per part; conflicts are then merged and sorted by
// vertex id, so the report never depends on scheduling.
std::vector<IntraConflict> intra_part_conflicts(const ConstructionGraph& G, int threads) {
    const int reach = 4 * G.k;
    std::vector<std::vector<IntraConflict>> per_part(G.parts.size());
    parallel_over(static_cast<int>(G.parts.size()), threads, [&](int pi) {
        const Part& part = G.parts[pi];
        for (int u : part.vertices) {
            std::vector<int> dist = bfs_distances_bounded(G.graph, u, reach);
            for (int v : part.vertices)
                if (v > u && dist[v] >= 0) per_part[pi].push_back({u, v, dist[v], part.tag});
        }
    });
    std::vector<IntraConflict> conflicts;
    for (auto& chunk : per_part)
        conflicts.insert(conflicts.end(), chunk.begin(), chunk.end());
    std::sort(conflicts.begin(), conflicts.end(),
              [](const IntraConflict& a, const IntraConflict& b) {
                  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
              });
    return conflicts;
}

void require_labels(const ConstructionGraph& G) {
    if (static_cast<int>(G.labels.size()) != G.graph.vertex_count())
        throw Error("this check needs vertex labels (levels)");
}

}  // namespace

VerificationReport verify_incidence(const IncidenceGraph& H) {
    Stopwatch timer;
    const int n = H.n();
    VerificationReport report;
    report.claim = "incidence";
    report.params = "q=" + std::to_string(n);

    auto& edge_item = report.add_item("edge count equals n^3");
    long long expected = static_cast<long long>(n) * n * n;
    if (H.graph.edge_count() != expected)
        report.fail(edge_item, "expected " + std::to_string(expected) + " edges, found " +
                                   std::to_string(H.graph.edge_count()));

    auto& degree_item = report.add_item("every vertex has degree n");
    for (int v = 0; v < H.graph.vertex_count(); ++v)
        if (H.graph.degree(v) != n)
            report.fail(degree_item, "vertex " + std::to_string(v + 1) + " has degree " +
                                         std::to_string(H.graph.degree(v)));

    auto& block_item = report.add_item("every block between classes is a perfect matching");
    for (int i = 0; i < n; ++i) {
        for (int cls = 1; cls <= n; ++cls) {
            // Points of the i-th vertical line against lines of this class:
            // each point must meet exactly one line and vice versa.
            std::vector<int> line_hits(n, 0);
            bool ok = true;
            for (int y = 0; y < n && ok; ++y) {
                const int p = i * n + y;
                int hits = 0;
                for (int idx = 0; idx < n; ++idx)
                    if (H.graph.has_edge(p, H.line_vertex(cls, idx))) {
                        ++hits;
                        ++line_hits[idx];
                    }
                if (hits != 1) ok = false;
            }
            for (int idx = 0; idx < n; ++idx)
                if (line_hits[idx] != 1) ok = false;
            if (!ok)
                report.fail(block_item, "block a" + std::to_string(i + 1) + " x class " +
                                            std::to_string(cls) + " is not a perfect matching");
        }
    }

    report.elapsed_ms = timer.ms();
    return report;
}

VerificationReport verify_lemma1(const ConstructionGraph& G, int threads) {
    Stopwatch timer;
    VerificationReport report;
    report.claim = "lemma1";
    report.params = construction_params(G);

    auto& item = report.add_item("every intra-part pair at distance >= 4k+1");
    for (const auto& c : intra_part_conflicts(G, threads))
        report.fail(item, pair_witness(c.tag, c.u, c.v, c.dist));

    if (G.n <= 3) {
        auto& cross = report.add_item("materialized power graph agrees");
        Graph pw = power(G.graph, 4 * G.k);
        bool edge_free = true;
        for (const auto& part : G.parts)
            for (size_t a = 0; a < part.vertices.size() && edge_free; ++a)
                for (size_t b = a + 1; b < part.vertices.size(); ++b)
                    if (pw.has_edge(part.vertices[a], part.vertices[b])) {
                        report.fail(cross, "power-graph edge inside part " + part.tag);
                        edge_free = false;
                        break;
                    }
        if (edge_free != item.pass)
            report.fail(cross, "distance check and power graph disagree");
    }

    report.elapsed_ms = timer.ms();
    return report;
}

VerificationReport verify_lemma2(const ConstructionGraph& G, int threads) {
    require_labels(G);
    Stopwatch timer;
    VerificationReport report;
    report.claim = "lemma2";
    report.params = construction_params(G);
    const int reach = 4 * G.k;
    const int n_vertices = G.graph.vertex_count();

    std::vector<int> low;  // vertices in levels 0..k-1
    for (int v = 0; v < n_vertices; ++v)
        if (G.level(v) <= G.k - 1) low.push_back(v);

    auto& part_item = report.add_item("restriction keeps (k-1)n^2+n whole parts of size n");
    {
        std::vector<int> seen(G.parts.size(), 0);
        for (int v : low) {
            if (G.part_of[v] == -1) {
                report.fail(part_item,
                            "vertex " + std::to_string(v + 1) + " is in no part");
                continue;
            }
            ++seen[G.part_of[v]];
        }
        long long whole = 0;
        for (size_t p = 0; p < G.parts.size(); ++p) {
            if (seen[p] == 0) continue;
            if (seen[p] != static_cast<int>(G.parts[p].vertices.size())) {
                report.fail(part_item, "part " + G.parts[p].tag + " is split by the level cut");
            } else {
                ++whole;
            }
        }
        long long expected =
            static_cast<long long>(G.k - 1) * G.n * G.n + G.n;
        if (whole != expected)
            report.fail(part_item, "expected " + std::to_string(expected) +
                                       " parts below level k, found " + std::to_string(whole));
    }

    auto& intra_item = report.add_item("intra-part pairs at distance >= 4k+1");
    auto& cross_item = report.add_item("cross-part pairs at distance <= 4k");
    std::vector<std::vector<std::string>> intra_found(low.size()), cross_found(low.size());
    parallel_over(static_cast<int>(low.size()), threads, [&](int i) {
        const int u = low[i];
        if (G.part_of[u] == -1) return;
        std::vector<int> dist = bfs_distances_bounded(G.graph, u, reach);
        for (int v : low) {
            if (v <= u || G.part_of[v] == -1) continue;
            const bool same_part = G.part_of[u] == G.part_of[v];
            const bool within = dist[v] >= 0;
            if (same_part && within)
                intra_found[i].push_back(
                    pair_witness(G.parts[G.part_of[u]].tag, u, v, dist[v]));
            if (!same_part && !within)
                cross_found[i].push_back("parts " + G.parts[G.part_of[u]].tag + "/" +
                                         G.parts[G.part_of[v]].tag + " vertices " +
                                         std::to_string(u + 1) + " " + std::to_string(v + 1) +
                                         " at distance > 4k");
        }
    });
    for (size_t i = 0; i < low.size(); ++i) {
        for (const auto& w : intra_found[i]) report.fail(intra_item, w);
        for (const auto& w : cross_found[i]) report.fail(cross_item, w);
    }

    if (G.n <= 3) {
        auto& cross = report.add_item("materialized power graph agrees");
        Graph pw = power(G.graph, reach);
        bool match = true;
        for (size_t a = 0; a < low.size() && match; ++a)
            for (size_t b = a + 1; b < low.size(); ++b) {
                int u = low[a], v = low[b];
                bool expect = G.part_of[u] != G.part_of[v];
                if (pw.has_edge(u, v) != expect) {
                    report.fail(cross, "power-graph adjacency of " + std::to_string(u + 1) +
                                           " " + std::to_string(v + 1) +
                                           " contradicts the partition");
                    match = false;
                    break;
                }
            }
    }

    report.elapsed_ms = timer.ms();
    return report;
}

std::vector<int> low_level_transversal(const ConstructionGraph& G) {
    std::vector<int> transversal;
    for (const auto& part : G.parts) {
        bool low = true;
        for (int v : part.vertices)
            if (G.level(v) > G.k - 1) {
                low = false;
                break;
            }
        if (low) transversal.push_back(*std::min_element(part.vertices.begin(),
                                                         part.vertices.end()));
    }
    return transversal;
}

VerificationReport verify_counts(const ConstructionGraph& G, int threads) {
    require_labels(G);
    Stopwatch timer;
    VerificationReport report;
    report.claim = "counts";
    report.params = construction_params(G);
    const int n = G.n, k = G.k;

    auto& vertex_item = report.add_item("|V| = n^3*k + n");
    if (G.graph.vertex_count() != expected_vertex_count(n, k))
        report.fail(vertex_item, std::to_string(G.graph.vertex_count()) + " != " +
                                     std::to_string(expected_vertex_count(n, k)));

    auto& part_item = report.add_item("k*n^2+1 parts, each of size n");
    if (static_cast<long long>(G.parts.size()) != expected_part_count(n, k))
        report.fail(part_item, "part count " + std::to_string(G.parts.size()));
    for (const auto& part : G.parts)
        if (static_cast<int>(part.vertices.size()) != n)
            report.fail(part_item, "part " + part.tag + " has size " +
                                       std::to_string(part.vertices.size()));

    auto& degree_item = report.add_item("max degree = n");
    if (G.graph.max_degree() != n)
        report.fail(degree_item, "max degree " + std::to_string(G.graph.max_degree()));

    auto& connected_item = report.add_item("connected");
    if (!is_connected(G.graph)) report.fail(connected_item, "graph is disconnected");

    auto& proper_item = report.add_item("partition colors the 4k-th power properly");
    for (const auto& c : intra_part_conflicts(G, threads))
        report.fail(proper_item, pair_witness(c.tag, c.u, c.v, c.dist));

    auto& clique_item = report.add_item("transversal clique of size (k-1)n^2+n in the power");
    std::vector<int> transversal = low_level_transversal(G);
    const long long expected_clique = static_cast<long long>(k - 1) * n * n + n;
    if (static_cast<long long>(transversal.size()) != expected_clique)
        report.fail(clique_item,
                    "transversal size " + std::to_string(transversal.size()) + " != " +
                        std::to_string(expected_clique));
    for (size_t a = 0; a < transversal.size(); ++a) {
        std::vector<int> dist = bfs_distances_bounded(G.graph, transversal[a], 4 * k);
        for (size_t b = a + 1; b < transversal.size(); ++b)
            if (dist[transversal[b]] < 0)
                report.fail(clique_item, "transversal vertices " +
                                             std::to_string(transversal[a] + 1) + " " +
                                             std::to_string(transversal[b] + 1) +
                                             " at distance > 4k");
    }

    auto& interval_item = report.add_item("chromatic interval for the power is non-empty");
    if (expected_clique > expected_part_count(n, k))
        report.fail(interval_item, "lower bound exceeds upper bound");

    if (n <= 3) {
        auto& cross = report.add_item("clique verified on the materialized power graph");
        Graph pw = power(G.graph, 4 * k);
        try {
            std::vector<int> clique = clique_lower(pw, transversal);
            if (static_cast<long long>(clique.size()) < expected_clique)
                report.fail(cross, "clique size " + std::to_string(clique.size()));
        } catch (const HintNotCliqueError& e) {
            report.fail(cross, e.what());
        }
    }

    report.elapsed_ms = timer.ms();
    return report;
}

VerificationReport verify_upper_chain(const Graph& g, int k, const std::string& label,
                                      int chi_budget, int clique_limit) {
    if (k < 3 || k % 2 == 0) throw KNotOddOrTooSmallError(k);
    if (!is_connected(g)) throw DisconnectedError();

    Stopwatch timer;
    VerificationReport report;
    report.claim = "upper";
    report.params = label + " k=" + std::to_string(k) + " n=" + std::to_string(g.vertex_count());

    const int n = g.vertex_count();
    const int half = k / 2;       // floor
    const int half_up = half + 1; // ceil, k odd
    DistanceMatrix dist = bfs_all_pairs(g);

    int max_ball_k = 0, max_ball_half = 0;
    for (int v = 0; v < n; ++v) {
        max_ball_k = std::max(max_ball_k, dist.ball_size(v, k));
        max_ball_half = std::max(max_ball_half, dist.ball_size(v, half));
    }
    const int delta_g = g.max_degree();
    const int delta_gk = max_ball_k - 1;

    std::vector<int> centers;  // all vertices of maximum degree in g^k
    for (int v = 0; v < n; ++v)
        if (dist.ball_size(v, k) == max_ball_k) centers.push_back(v);

    auto& containment_item = report.add_item("(i) far ball covered by half-balls around A");
    auto& clique_item = report.add_item("(ii) sphere at floor(k/2) is a clique in g^k");
    auto& acount_item = report.add_item("(iii) |A| <= (Delta(g)-1)|S|");
    auto& ballsum_item = report.add_item("(iv) |B(x,k)| <= (1+|A|) max |B(v,floor(k/2))|");

    for (int x : centers) {
        std::vector<int> sphere_s, sphere_a;
        for (int v = 0; v < n; ++v) {
            if (dist.at(x, v) == half) sphere_s.push_back(v);
            if (dist.at(x, v) == half_up) sphere_a.push_back(v);
        }

        for (int z = 0; z < n; ++z) {
            int dxz = dist.at(x, z);
            if (dxz == DistanceMatrix::unreachable || dxz <= half || dxz > k) continue;
            bool covered = false;
            for (int y : sphere_a)
                if (dist.at(y, z) != DistanceMatrix::unreachable && dist.at(y, z) <= half) {
                    covered = true;
                    break;
                }
            if (!covered)
                report.fail(containment_item, "x=" + std::to_string(x + 1) + " z=" +
                                                  std::to_string(z + 1) + " uncovered");
        }

        for (size_t a = 0; a < sphere_s.size(); ++a)
            for (size_t b = a + 1; b < sphere_s.size(); ++b) {
                int u = sphere_s[a], v = sphere_s[b];
                if (dist.at(u, v) == DistanceMatrix::unreachable || dist.at(u, v) > k)
                    report.fail(clique_item, "x=" + std::to_string(x + 1) + " vertices " +
                                                 std::to_string(u + 1) + " " +
                                                 std::to_string(v + 1) + " at distance " +
                                                 std::to_string(dist.at(u, v)));
            }

        if (static_cast<long long>(sphere_a.size()) >
            static_cast<long long>(delta_g - 1) * static_cast<long long>(sphere_s.size()))
            report.fail(acount_item, "x=" + std::to_string(x + 1) + " |A|=" +
                                         std::to_string(sphere_a.size()) + " |S|=" +
                                         std::to_string(sphere_s.size()));

        if (static_cast<long long>(dist.ball_size(x, k)) >
            (1 + static_cast<long long>(sphere_a.size())) * max_ball_half)
            report.fail(ballsum_item,
                        "x=" + std::to_string(x + 1) + " |B(x,k)|=" +
                            std::to_string(dist.ball_size(x, k)) + " bound=" +
                            std::to_string((1 + sphere_a.size()) * max_ball_half));
    }

    if (n <= clique_limit) {
        Graph gk = power(g, k);
        const int omega = exact_clique(gk, clique_limit);

        auto& chain_item = report.add_item("(v) 1+Delta(g^k) <= Delta(g)*omega(g^k)^2");
        if (1 + static_cast<long long>(delta_gk) >
            static_cast<long long>(delta_g) * omega * omega)
            report.fail(chain_item, "1+" + std::to_string(delta_gk) + " > " +
                                        std::to_string(delta_g) + "*" + std::to_string(omega) +
                                        "^2");

        if (n <= chi_budget) {
            auto& chi_item = report.add_item("(v) omega(g^k) <= chi(g^k)");
            const int chi = chromatic_exact(gk, chi_budget);
            if (omega > chi)
                report.fail(chi_item,
                            "omega=" + std::to_string(omega) + " chi=" + std::to_string(chi));
        }

        auto& strict_item = report.add_item("(vi) Delta(g) < omega(g^k)");
        if (delta_g >= omega)
            report.fail(strict_item,
                        "Delta=" + std::to_string(delta_g) + " omega=" + std::to_string(omega));
    } else {
        auto& strict_item = report.add_item("(vi) Delta(g) < omega(g^k) (clique lower bound)");
        Graph gk = power(g, k);
        std::vector<int> clique = clique_lower(gk, {}, &g, half);
        if (delta_g >= static_cast<int>(clique.size()))
            report.fail(strict_item, "clique lower bound " + std::to_string(clique.size()) +
                                         " does not exceed Delta=" + std::to_string(delta_g));
    }

    report.elapsed_ms = timer.ms();
    return report;
}

VerificationReport verify_fk_bound(const Graph& g, int k, const std::string& label,
                                   int chi_budget) {
    if (k < 2) throw Error("power parameter must be >= 2 here, got " + std::to_string(k));
    Stopwatch timer;
    VerificationReport report;
    report.claim = "fk";
    report.params = label + " k=" + std::to_string(k) + " n=" + std::to_string(g.vertex_count());

    Graph gk = power(g, k);
    const int m = chromatic_exact(gk, chi_budget);
    const int list_upper = 1 + degeneracy_order(gk).degeneracy;
    const long long bound = k % 2 == 0 ? static_cast<long long>(m) * m
                                       : static_cast<long long>(m) * m * m;

    auto& item = report.add_item(k % 2 == 0 ? "1+degeneracy(g^k) < chi(g^k)^2"
                                            : "1+degeneracy(g^k) < chi(g^k)^3");
    if (list_upper >= bound)
        report.fail(item, "1+degeneracy=" + std::to_string(list_upper) + " m=" +
                              std::to_string(m) + " bound=" + std::to_string(bound));

    report.elapsed_ms = timer.ms();
    return report;
}

}  // namespace powercolor
