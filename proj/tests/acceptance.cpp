// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion. Exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "powercolor/choosability.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/construction.hpp"
#include "powercolor/formats.hpp"
#include "powercolor/generators.hpp"
#include "powercolor/random_graphs.hpp"
#include "powercolor/verification.hpp"

using namespace powercolor;

namespace {

struct Criterion {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ConstructionGraph grid_instance(int q, int k) { return build_construction(q, k); }

std::string tag(int q, int k) {
    return "(q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")";
}

// ---- criteria ----

void criterion1_plane_axioms(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto pe = prime_power_decomposition(q);
        VerificationReport report = plane_check(plane_build(field_new(pe->first, pe->second)));
        c.require(report.passed(), "plane axioms fail for q=" + std::to_string(q));
        c.require(report.items.size() == 5, "expected five axiom items");
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 5.0, "plane axiom runtime " + std::to_string(elapsed) + "s >= 5s");
}

void criterion2_incidence(Criterion& c) {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto start = std::chrono::steady_clock::now();
        auto pe = prime_power_decomposition(q);
        IncidenceGraph H = build_H(plane_build(field_new(pe->first, pe->second)));
        VerificationReport report = verify_incidence(H);
        c.require(report.passed(), "incidence checks fail for q=" + std::to_string(q));
        c.require(H.graph.edge_count() == static_cast<long long>(q) * q * q,
                  "edge count != q^3 for q=" + std::to_string(q));
        double elapsed = seconds_since(start);
        c.require(elapsed < 1.0,
                  "incidence runtime for q=" + std::to_string(q) + " is " +
                      std::to_string(elapsed) + "s >= 1s");
    }
}

void criterion3_construction_counts(Criterion& c) {
    for (int q : {2, 3, 4, 5, 7}) {
        for (int k : {2, 3, 4, 5}) {
            ConstructionGraph G = grid_instance(q, k);
            c.require(G.graph.vertex_count() == expected_vertex_count(q, k),
                      "|V| mismatch " + tag(q, k));
            c.require(static_cast<long long>(G.parts.size()) == expected_part_count(q, k),
                      "part count mismatch " + tag(q, k));
            for (const auto& part : G.parts)
                if (static_cast<int>(part.vertices.size()) != q) {
                    c.require(false, "part size mismatch " + tag(q, k));
                    break;
                }
            c.require(G.graph.max_degree() == q, "max degree mismatch " + tag(q, k));
            c.require(is_connected(G.graph), "disconnected " + tag(q, k));
        }
    }
}

void criterion4_lemma1(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    for (int q : {2, 3, 4, 5})
        for (int k : {2, 3, 4}) {
            VerificationReport report = verify_lemma1(grid_instance(q, k));
            c.require(report.passed(), "lemma1 fails " + tag(q, k));
        }
    double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "lemma1 runtime " + std::to_string(elapsed) + "s >= 30s");
}

void criterion5_lemma2(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    for (int q : {2, 3, 4, 5})
        for (int k : {2, 3, 4}) {
            VerificationReport report = verify_lemma2(grid_instance(q, k));
            c.require(report.passed(), "lemma2 fails " + tag(q, k));
        }
    double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "lemma2 runtime " + std::to_string(elapsed) + "s >= 30s");
}

void criterion6_chromatic_bounds(Criterion& c) {
    for (int q : {2, 3, 4, 5})
        for (int k : {2, 3, 4}) {
            ConstructionGraph G = grid_instance(q, k);
            VerificationReport report = verify_counts(G);
            c.require(report.passed(), "counts/bounds fail " + tag(q, k));
            long long lower = static_cast<long long>(k - 1) * q * q + q;
            long long upper = expected_part_count(q, k);
            c.require(lower <= upper, "empty chromatic interval " + tag(q, k));
            c.require(static_cast<long long>(low_level_transversal(G).size()) == lower,
                      "transversal size mismatch " + tag(q, k));
        }
}

void criterion7_upper_chain(Criterion& c) {
    c.require(verify_upper_chain(cycle_graph(7), 3, "c7").passed(), "chain fails on C7");
    c.require(verify_upper_chain(star_graph(4), 3, "k14").passed(), "chain fails on K_{1,4}");

    for (int kpow : {3, 5}) {
        for (auto [q, k] : {std::pair{2, 2}, {3, 2}}) {
            ConstructionGraph G = grid_instance(q, k);
            VerificationReport report =
                verify_upper_chain(G.graph, kpow, "construction" + tag(q, k));
            c.require(report.passed(), "chain fails on construction " + tag(q, k) +
                                           " at k'=" + std::to_string(kpow));
        }
    }

    std::mt19937 rng(kDefaultSeed);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(6, 30, 0.15, rng);
        VerificationReport report = verify_upper_chain(g, 3, "random");
        c.require(report.passed(), "chain fails on random graph " + std::to_string(trial));
    }
}

void criterion8_choosability_gap(Criterion& c) {
    auto start = std::chrono::steady_clock::now();

    Graph k24 = complete_bipartite(2, 4);
    c.require(chromatic_exact(k24) == 2, "chi(K_{2,4}) != 2");
    ChoiceBounds bounds = choice_number_bounds(k24);
    c.require(bounds.lower == 3 && bounds.upper == 3 && bounds.exact,
              "choice_number_bounds(K_{2,4}) != (3,3,exact)");

    ChoosabilityResult witness_run = choosable(k24, 2);
    c.require(witness_run.verdict == ChoosableVerdict::NotChoosable,
              "K_{2,4} not flagged as 2-unchoosable");
    if (witness_run.verdict == ChoosableVerdict::NotChoosable) {
        c.require(count_list_colorings_product(k24, witness_run.witness) == 0,
                  "K_{2,4} witness admits a proper coloring");
    }
    c.require(bounds.lower > chromatic_exact(k24), "no gap between chi_l and chi on K_{2,4}");

    Graph c4 = cycle_graph(4);
    ChoosabilityResult c4at2 = choosable(c4, 2);
    ChoosabilityResult c4at1 = choosable(c4, 1);
    c.require(c4at2.verdict == ChoosableVerdict::Choosable, "C4 not 2-choosable");
    c.require(c4at1.verdict == ChoosableVerdict::NotChoosable, "C4 1-choosable?");

    ChoosabilityResult k33 = choosable(complete_bipartite(3, 3), 2);
    c.require(k33.verdict == ChoosableVerdict::NotChoosable, "K_{3,3} not flagged");
    if (k33.verdict == ChoosableVerdict::NotChoosable)
        c.require(count_list_colorings_product(complete_bipartite(3, 3), k33.witness) == 0,
                  "K_{3,3} witness admits a proper coloring");

    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "choosability runtime " + std::to_string(elapsed) + "s >= 60s");
}

void criterion9_property_suites(Criterion& c) {
    // power composition on 50 seeded random graphs
    std::mt19937 rng(kDefaultSeed);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(draw(rng, 15)), 0.3, rng);
        for (int a : {2, 3, 4}) {
            Graph ga = power(g, a);
            for (int b : {2, 3, 4}) {
                if (!(power(ga, b) == power(g, a * b))) {
                    c.require(false, "power composition fails at trial " +
                                         std::to_string(trial) + " a=" + std::to_string(a) +
                                         " b=" + std::to_string(b));
                }
            }
        }
    }

    // degeneracy-greedy coloring on every built grid graph
    for (int q : {2, 3, 4, 5})
        for (int k : {2, 3, 4}) {
            ConstructionGraph G = grid_instance(q, k);
            DegeneracyResult res = degeneracy_order(G.graph);
            std::vector<int> order(res.order.rbegin(), res.order.rend());
            std::vector<int> colors = greedy_coloring(G.graph, order);
            c.require(is_proper_coloring(G.graph, colors),
                      "greedy coloring improper " + tag(q, k));
            c.require(color_count(colors) <= 1 + res.degeneracy,
                      "greedy coloring exceeds 1+degeneracy " + tag(q, k));
        }

    // file-format round trips are byte-stable
    ConstructionGraph G = grid_instance(3, 2);
    {
        std::ostringstream first;
        write_graph(first, G.graph);
        std::istringstream parse(first.str());
        std::ostringstream second;
        write_graph(second, read_graph(parse));
        c.require(first.str() == second.str(), "graph file round trip not byte-stable");
    }
    {
        std::ostringstream first;
        write_parts(first, G.parts);
        std::istringstream parse(first.str());
        std::ostringstream second;
        write_parts(second, read_parts(parse));
        c.require(first.str() == second.str(), "parts file round trip not byte-stable");
    }
    {
        std::ostringstream first;
        write_labels(first, G.labels);
        std::istringstream parse(first.str());
        std::ostringstream second;
        write_labels(second, read_labels(parse));
        c.require(first.str() == second.str(), "labels file round trip not byte-stable");
    }
    {
        ChoosabilityResult witness_run = choosable(complete_bipartite(2, 4), 2);
        std::ostringstream first;
        write_lists(first, witness_run.witness);
        std::istringstream parse(first.str());
        std::ostringstream second;
        write_lists(second, read_lists(parse));
        c.require(first.str() == second.str(), "lists file round trip not byte-stable");
    }
}

void criterion10_fk_bounds(Criterion& c) {
    std::mt19937 rng(kDefaultSeed);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected_graph(4, 20, 0.2, rng);
        for (int k : {2, 3, 4, 5}) {
            VerificationReport report = verify_fk_bound(g, k, "seeded");
            c.require(report.passed(), "fk bound fails at trial " + std::to_string(trial) +
                                           " k=" + std::to_string(k));
        }
    }
}

struct Entry {
    int id;
    const char* name;
    void (*run)(Criterion&);
};

}  // namespace

int main() {
    const Entry entries[] = {
        {1, "plane axioms for q in {2,3,4,5,7,8,9}", criterion1_plane_axioms},
        {2, "incidence structure: matching blocks, |E(H)| = q^3", criterion2_incidence},
        {3, "construction counts on {2,3,4,5,7} x {2,3,4,5}", criterion3_construction_counts},
        {4, "lemma1: intra-part distance >= 4k+1 on {2,3,4,5} x {2,3,4}", criterion4_lemma1},
        {5, "lemma2: low levels complete multipartite on the same grid", criterion5_lemma2},
        {6, "chromatic bounds: partition coloring and transversal clique",
         criterion6_chromatic_bounds},
        {7, "upper-bound chain on C7, K_{1,4}, constructions, 20 random graphs",
         criterion7_upper_chain},
        {8, "choosability gap: K_{2,4}, C4, K_{3,3} with verified witnesses",
         criterion8_choosability_gap},
        {9, "property suites: power composition, greedy coloring, round trips",
         criterion9_property_suites},
        {10, "fk bound witnesses on seeded graphs, k in {2,3,4,5}", criterion10_fk_bounds},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        Criterion criterion;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.run(criterion);
        } catch (const std::exception& e) {
            criterion.failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        bool pass = criterion.failures.empty();
        std::printf("[%s] criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", entry.id,
                    entry.name, elapsed);
        for (const auto& f : criterion.failures) std::printf("         %s\n", f.c_str());
        if (!pass) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", std::size(entries));
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
