#ifndef POWERCOLOR_VERIFICATION_HPP
#define POWERCOLOR_VERIFICATION_HPP

#include <string>

#include "powercolor/construction.hpp"
#include "powercolor/graph.hpp"
#include "powercolor/report.hpp"

namespace powercolor {

/// Incidence-graph shape: n^3 edges, every vertex of degree n, and every
/// block between a vertical-line point class and a parallel line class a
/// perfect matching. Claim id "incidence".
VerificationReport verify_incidence(const IncidenceGraph& H);

/// Claim id "lemma1": the 4k-th power of the construction graph has no edge
/// inside any part, i.e. every intra-part pair is at distance >= 4k+1.
/// Checked exhaustively via depth-limited BFS; for n <= 3 the power graph is
/// also materialized and compared. Fail witnesses carry the offending pair
/// and its distance.
VerificationReport verify_lemma1(const ConstructionGraph& G, int threads = 1);

/// Claim id "lemma2": restricted to levels 0..k-1, the 4k-th power is
/// exactly complete multipartite with the restricted partition: cross-part
/// pairs at distance <= 4k, intra-part pairs at distance >= 4k+1. Same
/// cross-check policy as lemma1.
VerificationReport verify_lemma2(const ConstructionGraph& G, int threads = 1);

/// Claim id "counts": the count identities (vertices, parts, part sizes,
/// max degree, connectivity), the partition-induced proper coloring of the
/// 4k-th power (chromatic upper bound k*n^2+1) and a verified transversal
/// clique of size (k-1)*n^2+n (clique lower bound).
VerificationReport verify_counts(const ConstructionGraph& G, int threads = 1);

/// Claim id "upper": the degree/clique inequality chain for odd k >= 3 on a
/// connected graph, checked for every vertex of maximum ball size:
///   (i)  B(x,k) \ B(x,floor(k/2)) is covered by balls of radius floor(k/2)
///        around the sphere at distance ceil(k/2),
///   (ii) the sphere S at distance floor(k/2) is a clique in g^k,
///   (iii) |A| <= (Delta(g)-1)|S|,
///   (iv) |B(x,k)| <= (1+|A|) max_v |B(v,floor(k/2))|,
///   (v)  1+Delta(g^k) <= Delta(g)*omega(g^k)^2 <= Delta(g)*chi(g^k)^2
///        (omega needs |V| <= clique_limit, chi needs |V| <= chi_budget),
///   (vi) Delta(g) < omega(g^k).
/// Throws KNotOddOrTooSmallError / DisconnectedError.
VerificationReport verify_upper_chain(const Graph& g, int k, const std::string& label = "graph",
                                      int chi_budget = 30, int clique_limit = 64);

/// Claim id "fk": with m = chi(g^k) computed exactly, the list-chromatic
/// upper bound 1+degeneracy(g^k) stays below m^2 for even k and m^3 for odd
/// k. Throws BudgetExceededError when g is too large for exact chi.
VerificationReport verify_fk_bound(const Graph& g, int k, const std::string& label = "graph",
                                   int chi_budget = 30);

/// Lemma-2 transversal: the least vertex of every part that lives entirely
/// in levels 0..k-1. Pairwise within distance 4k, hence a clique in the
/// 4k-th power, of size (k-1)*n^2+n.
std::vector<int> low_level_transversal(const ConstructionGraph& G);

}  // namespace powercolor

#endif
