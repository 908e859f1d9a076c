#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "vass/linalg.hpp"

namespace vass {

/// A point of Q^2.
struct Vec2 {
    Rational x;
    Rational y;

    bool operator==(const Vec2&) const = default;
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a);
Vec2 operator*(const Rational& k, const Vec2& v);
Rational dot(const Vec2& a, const Vec2& b);
/// a.x * b.y - a.y * b.x; positive when b lies counterclockwise of a.
Rational cross(const Vec2& a, const Vec2& b);
bool is_zero(const Vec2& v);
/// Counterclockwise quarter turn (-y, x).
Vec2 perp(const Vec2& v);
/// The positive multiple of v with coprime integer entries.
Vec2 primitive(const Vec2& v);
/// Strict angular order on nonzero vectors, starting at the positive x-axis.
bool angle_less(const Vec2& a, const Vec2& b);

enum class ConeKind { Point, Ray, Line, Salient, Halfplane, Plane };

std::string_view to_string(ConeKind kind);

/// A closed convex cone in Q^2 in canonical form:
///   Point      no generators
///   Ray        {r}
///   Line       {d}, d's first nonzero entry positive
///   Salient    {a, b} with cross(a, b) > 0, i.e. a to b counterclockwise
///   Halfplane  {b, m}: boundary direction b, interior normal m = perp(b)
///   Plane      no generators
/// Generators are primitive integer vectors, so equal cones compare equal.
class Cone2D {
public:
    Cone2D() = default;

    static Cone2D from_generators(const std::vector<Vec2>& generators);
    /// {x : <n, x> >= 0 for every n in normals}.
    static Cone2D from_constraints(const std::vector<Vec2>& normals);
    static Cone2D plane() { return from_generators({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

    [[nodiscard]] ConeKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Vec2>& generators() const noexcept { return generators_; }
    /// Vectors whose conic hull is the cone (lines contribute both directions).
    [[nodiscard]] std::vector<Vec2> spanning_rays() const;
    /// Inner normals n with cone = {x : <n, x> >= 0 for all n}.
    [[nodiscard]] std::vector<Vec2> normals() const;
    [[nodiscard]] bool contains(const Vec2& v) const;
    /// Contains two linearly independent vectors.
    [[nodiscard]] bool is_nontrivial() const noexcept;

    bool operator==(const Cone2D&) const = default;

private:
    ConeKind kind_ = ConeKind::Point;
    std::vector<Vec2> generators_;
};

Cone2D intersect(const Cone2D& a, const Cone2D& b);
/// Minkowski sum.
Cone2D sum(const Cone2D& a, const Cone2D& b);

} // namespace vass
