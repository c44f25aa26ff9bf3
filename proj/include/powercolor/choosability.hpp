#ifndef POWERCOLOR_CHOOSABILITY_HPP
#define POWERCOLOR_CHOOSABILITY_HPP

#include <vector>

#include "powercolor/graph.hpp"

namespace powercolor {

enum class ChoosableVerdict { Choosable, NotChoosable, Unknown };

/// Outcome of a t-choosability decision. A not-choosable verdict always
/// carries witness lists that admit no proper coloring; a choosable verdict
/// is only reported after the complete symmetry-reduced enumeration ran
/// (assignments_tested is its exhaustion certificate).
struct ChoosabilityResult {
    int t = 0;
    ChoosableVerdict verdict = ChoosableVerdict::Unknown;
    std::vector<std::vector<int>> witness;  // one sorted list per vertex
    long long assignments_tested = 0;
    int universe_size = 0;
};

inline constexpr long long kDefaultChoosabilityEffort = 2'000'000;

/// Decides t-choosability by enumerating list assignments over a universe
/// of t*|V| colors up to color-permutation symmetry: colors are introduced
/// in first-use order, so every orbit of assignments is visited. Assignments
/// are enumerated in increasing number of distinct colors; each one is
/// settled by an exhaustive list-coloring search. Verdict Unknown when the
/// effort budget runs out first.
ChoosabilityResult choosable(const Graph& g, int t,
                             long long effort = kDefaultChoosabilityEffort);

/// Backtracking decision: does any proper coloring pick each vertex's color
/// from its list?
bool has_proper_list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists);

/// Independent witness check: walks the full Cartesian product of the lists
/// and counts proper colorings, with no pruning shared with the decision
/// path. Throws BudgetExceededError if the product exceeds `cap`.
long long count_list_colorings_product(const Graph& g,
                                       const std::vector<std::vector<int>>& lists,
                                       long long cap = 50'000'000);

struct ChoiceBounds {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

/// [lower, upper] bounds on the choice number: upper = 1 + degeneracy,
/// lower = chromatic number (when within chi_budget), raised to t+1 for
/// every t with a verified not-choosable witness; a choosable verdict at t
/// lowers the upper bound to t.
ChoiceBounds choice_number_bounds(const Graph& g,
                                  long long effort = kDefaultChoosabilityEffort,
                                  int chi_budget = 30);

}  // namespace powercolor

#endif
