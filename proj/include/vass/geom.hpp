#pragma once

#include <utility>
#include <vector>

#include "vass/cone2d.hpp"
#include "vass/core.hpp"
#include "vass/linalg.hpp"
#include "vass/projection.hpp"

namespace vass {

/// B_{v,W} = {u in N^d : exists alpha >= 0 with ||u - alpha v|| <= W}.
struct Beam {
    IntVector direction;
    Integer width;

    [[nodiscard]] bool is_a_beam(const Integer& a) const { return norm(direction) <= a && width <= a; }
    bool operator==(const Beam&) const = default;
};

/// u in N^d and some alpha (alpha >= 0 unless allow_negative_alpha) with
/// ||u - alpha v|| <= W.
bool in_beam(const IntVector& u, const IntVector& v, const Integer& width, bool allow_negative_alpha = false);
bool in_beam(const IntVector& u, const Beam& beam);

/// (v+, v-) with B^Z_{v,W} contained in B_{v+,W} u B_{v-,W}.
std::pair<Beam, Beam> split_generalized_beam(const IntVector& v, const Integer& width);

/// min over rational alpha of ||u - alpha v||, by enumerating the
/// breakpoints of the piecewise-linear objective. Throws ZeroDirection.
Rational min_ray_distance(const IntVector& u, const IntVector& v);

/// A closed convex cone inside a plane of Q^d, kept in the coefficient chart
/// of the plane's RREF basis.
class Cone2 {
public:
    /// Throws VectorOutsidePlane, and Precondition unless rank(plane) = 2.
    static Cone2 from_generators(const Subspace& plane, const std::vector<QVector>& generators);
    static Cone2 from_generators(const Subspace& plane, const std::vector<IntVector>& generators);

    [[nodiscard]] const Subspace& plane() const noexcept { return plane_; }
    [[nodiscard]] ConeKind kind() const noexcept { return chart_.kind(); }
    /// Canonical generators (see Cone2D) lifted to primitive integer vectors.
    [[nodiscard]] std::vector<IntVector> generators() const;
    /// Lifted spanning rays; their conic hull is the cone.
    [[nodiscard]] std::vector<IntVector> spanning_rays() const;
    [[nodiscard]] bool contains(const QVector& v) const;
    [[nodiscard]] bool contains(const IntVector& v) const;
    [[nodiscard]] bool is_nontrivial() const noexcept { return chart_.is_nontrivial(); }
    [[nodiscard]] const Cone2D& chart() const noexcept { return chart_; }

    bool operator==(const Cone2&) const = default;

private:
    Cone2(Subspace plane, Cone2D chart) : plane_(std::move(plane)), chart_(std::move(chart)) {}
    friend Cone2 cone_intersect(const Cone2& a, const Cone2& b);

    Subspace plane_;
    Cone2D chart_;
};

/// Throws PlaneMismatch when the planes differ.
Cone2 cone_intersect(const Cone2& a, const Cone2& b);

/// span{u1, u2} of the witness.
Subspace witness_plane(const SrpWitness& w);

/// SeqCone(v_1, ..., v_k): nonnegative combinations whose every prefix sum is
/// nonnegative, computed incrementally in I-coordinates. Vectors must lie in
/// the plane of the witness (VectorOutsidePlane otherwise).
Cone2 seqcone(const std::vector<IntVector>& vectors, const SrpWitness& witness);

inline constexpr std::size_t seqcone_oracle_cap = 6;

/// Exact feasibility of sum a_j v_j = target, a >= 0, all prefix sums >= 0, by
/// Fourier-Motzkin elimination. Throws TooLarge above seqcone_oracle_cap
/// vectors.
bool seqcone_member_oracle(const std::vector<IntVector>& vectors, const QVector& target);
bool seqcone_member_oracle(const std::vector<IntVector>& vectors, const IntVector& target);

/// v^R = (v(2), -v(1)).
Vec2 right_rotation(const Vec2& v);
/// a -> b (strict): <b, a^R> > 0.
bool rot_strict(const Vec2& a, const Vec2& b);
/// a -> b (weak): <b, a^R> >= 0.
bool rot_weak(const Vec2& a, const Vec2& b);

/// w in Cone{u, v}, decided as u -> w -> v (weak) on I-projections. The pair
/// is taken in the order that makes u -> v strict; throws NotStrictRotation
/// when u and v are parallel and VectorOutsidePlane when a vector leaves the
/// witness plane.
bool rot_membership(const IntVector& u, const IntVector& v, const IntVector& w, const SrpWitness& witness);

} // namespace vass
