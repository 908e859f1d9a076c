#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vass/cone2d.hpp"
#include "vass/core.hpp"
#include "vass/linalg.hpp"

namespace vass {

/// Z_t = {u : u(i) * t(i) >= 0 for all i}, t in {+1, -1}^d.
struct Orthant {
    std::vector<int> signs;

    static Orthant nonnegative(std::size_t dim) { return Orthant{std::vector<int>(dim, 1)}; }
    [[nodiscard]] std::size_t dim() const noexcept { return signs.size(); }
    [[nodiscard]] bool contains(const IntVector& v) const;
    [[nodiscard]] bool contains(const QVector& v) const;
};

/// A sign-reflecting projection I = {i1, i2} (0-based) with its canonical
/// horizontal and vertical vectors.
struct SrpWitness {
    std::size_t i1 = 0;
    std::size_t i2 = 1;
    IntVector u1;
    IntVector u2;

    bool operator==(const SrpWitness&) const = default;
};

/// Decides whether v|_I in Z|_I implies v in Z for every v in P.
/// Throws BadIndices unless i1 != i2 are both below the dimension, and
/// Precondition when rank(P) > 2.
bool verify_srp(const Subspace& plane, const Orthant& z, std::size_t i1, std::size_t i2);

/// {lambda : sum_j lambda_j * basis_j in Z} in the coefficient chart of a
/// plane (the RREF rows of `plane`).
Cone2D orthant_cone_in_chart(const Subspace& plane, const Orthant& z);

/// Searches index pairs in lexicographic order. Absent when P n Z has no two
/// independent vectors or no pair verifies. Throws Precondition unless
/// rank(P) = 2.
std::optional<SrpWitness> find_srp(const Subspace& plane, const Orthant& z);

/// Canonical vectors derived from v1, v2 for I = {i1, i2}: u1(i2) = u2(i1) = 0,
/// |u1(i1)| = |u2(i2)| > 0, both in P n Z, norms at most 2 max(|v1|,|v2|)^2.
/// Throws DependentBasis or NotSignReflecting.
std::pair<IntVector, IntVector> canonical_vectors(const IntVector& v1, const IntVector& v2, std::size_t i1,
                                                  std::size_t i2, const Orthant& z);

/// The unique v in span{u1, u2} with v(i1) = x(0), v(i2) = x(1).
QVector lift_from_projection(const SrpWitness& w, const Vec2& x);
Vec2 project(const SrpWitness& w, const QVector& v);
Vec2 project(const SrpWitness& w, const IntVector& v);

/// P n Q^d_{>=0} contains two linearly independent vectors. False for
/// rank below 2; throws GdimTooHigh above 2.
bool is_proper(const Subspace& cycle_space);
bool is_proper(const Vass& g);

struct SupportProjection {
    Vass vass;
    /// Kept coordinates S = supp(Cyc(G)), ascending.
    std::vector<std::size_t> support;
    /// Per output state: the original state and its vector over [d] \ S.
    std::vector<StateId> original_state;
    std::vector<IntVector> folded;
};

inline constexpr std::size_t default_projection_cap = 200000;

/// G^S. The pruned form keeps the states reachable from some (q, chi * 1),
/// which carries every simple cycle of G, and drops isolated states. Throws
/// TooLarge when |Q| * (2 chi + 1)^{|complement of S|} exceeds `state_cap`.
SupportProjection support_projection(const Vass& g, bool pruned = true,
                                     std::size_t state_cap = default_projection_cap);

} // namespace vass
