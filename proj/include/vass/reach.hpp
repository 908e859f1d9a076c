#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vass/core.hpp"

namespace vass {

struct ReachQuery {
    Vass vass;
    Configuration source;
    Configuration target;
};

enum class Verdict { Reachable, Unreachable, Unknown };

std::string_view to_string(Verdict v);

struct ReachAnswer {
    Verdict verdict = Verdict::Unknown;
    /// Transition indices of a run from source to target when reachable.
    std::optional<std::vector<TransitionId>> witness;
    /// Human-readable description of the explored space.
    std::string bound_used;
};

/// A run of length l in the source corresponds to a run of length
/// factor * l + offset in the output.
struct LengthMap {
    std::size_t factor = 1;
    std::size_t offset = 0;

    [[nodiscard]] std::string describe() const;
};

struct ReductionOutput {
    Vass vass;
    Configuration source;
    Configuration target;
    LengthMap length_map;
};

/// Throws DimensionMismatch or UnknownState when the query is malformed.
void validate(const ReachQuery& q);

/// Fresh states p' and q' with p' -u-> p and q -(-v)-> q'. The original
/// transitions keep their indices; the two new ones come last.
ReductionOutput reduce_to_zero_reach(const ReachQuery& q);

/// Shortest-witness BFS over configurations of norm at most `norm_cap`.
/// Unreachable is reported only when no successor was cut off by the cap.
ReachAnswer oracle_reach(const ReachQuery& q, const Integer& norm_cap);

inline constexpr std::size_t default_config_cap = 4'000'000;

/// BFS over runs of length at most `max_len`. A missed target is reported as
/// unreachable when the search closed before the bound or when the caller
/// declares the bound complete; otherwise unknown. Stops with unknown after
/// `config_cap` distinct configurations.
ReachAnswer bounded_reach(const ReachQuery& q, std::size_t max_len, bool bound_is_complete = false,
                          std::size_t config_cap = default_config_cap);

/// Complete decision for geometric dimension 0 by searching runs that never
/// repeat a state. Throws NotGeoZero otherwise and TooLarge above 64 states.
ReachAnswer decide_geo0(const ReachQuery& q);

/// Integer normal of the cycle space of a 3-VASS with gdim 2: cross product
/// of the canonical basis, primitive, first nonzero entry positive. Throws
/// WrongDimension and WrongGdim.
IntVector normal_vector(const Vass& g);

/// Minimal (x, y) in N^2 with a x + b y >= dval.
std::vector<std::pair<Integer, Integer>> minimal_solutions(const Integer& a, const Integer& b, const Integer& dval);

/// Adds a fresh isolated state with two loops so that gdim becomes 2; the
/// VASS is returned unchanged when gdim is already 2.
Vass pad_to_gdim2(const Vass& g);

/// The reduction of a 3-VASS with gdim <= 2 and zero source/target counters
/// to a VASS of dimension at most 2. Case 2 has length map 3l, Case 1 keeps
/// lengths. States that lie on no path from the new source to the new target
/// are dropped. Throws WrongDimension, GdimTooHigh, and Precondition for
/// nonzero counters.
ReductionOutput reduce_3vass_to_2vass(const ReachQuery& q);

/// 1 for Case 1 (n >= 0 or n <= 0), 2 for mixed signs.
int reduction_case(const IntVector& n);

/// B = 3 chi(G) ||n||.
Integer run_in_cd_bound(const Vass& g, const IntVector& n);

struct ReachBudget {
    std::size_t max_len = 64;
    Integer norm_cap = 32;
    /// Exponent constant c in chi^{c * sigma * d^4}.
    unsigned exp_const = 1;
    std::size_t config_cap = default_config_cap;
};

/// ceil(max(chi, 2)^{c * sigma * d^4}), saturated at `cap`.
std::size_t theoretical_length_bound(const Vass& g, unsigned exp_const, std::size_t cap);

/// Dispatcher: geometric dimension 0 goes to decide_geo0; otherwise bounded
/// search on the 0-reachability instance up to min(budget, theoretical bound).
/// An exact verdict of the norm-capped oracle overrides an inexact one.
ReachAnswer decide_reach(const ReachQuery& q, const ReachBudget& budget = {});

} // namespace vass
