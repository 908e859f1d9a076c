#include "doctest.h"

#include "vass/cone2d.hpp"
#include "vass/generate.hpp"

using namespace vass;

namespace {

Vec2 v(long x, long y) { return Vec2{x, y}; }

// Brute-force membership: x in cone{gens} iff x is a nonnegative combination
// of at most two generators (Caratheodory in the plane).
bool in_conic_hull(const std::vector<Vec2>& gens, const Vec2& x) {
    if (is_zero(x)) return true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& a = gens[i];
        if (cross(a, x) == 0 && dot(a, x) > 0) return true;
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto& b = gens[j];
            const Rational det = cross(a, b);
            if (det == 0) continue;
            const Rational alpha = cross(x, b) / det;
            const Rational beta = cross(a, x) / det;
            if (alpha >= 0 && beta >= 0) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("cone kinds from generators") {
    CHECK(Cone2D::from_generators({}).kind() == ConeKind::Point);
    CHECK(Cone2D::from_generators({v(0, 0)}).kind() == ConeKind::Point);
    auto ray = Cone2D::from_generators({v(2, 2), v(1, 1)});
    CHECK(ray.kind() == ConeKind::Ray);
    CHECK(ray.generators() == std::vector<Vec2>{v(1, 1)});
    CHECK(Cone2D::from_generators({v(1, 0), v(-3, 0)}).kind() == ConeKind::Line);
    auto salient = Cone2D::from_generators({v(1, 1), v(1, 0)});
    CHECK(salient.kind() == ConeKind::Salient);
    CHECK(salient.generators() == std::vector<Vec2>{v(1, 0), v(1, 1)});
    auto half = Cone2D::from_generators({v(1, 0), v(-1, 0), v(1, 1)});
    CHECK(half.kind() == ConeKind::Halfplane);
    CHECK(half.contains(v(0, 1)));
    CHECK_FALSE(half.contains(v(0, -1)));
    CHECK(Cone2D::from_generators({v(1, 0), v(0, 1), v(-1, -1)}).kind() == ConeKind::Plane);
}

TEST_CASE("intersections") {
    auto a = Cone2D::from_generators({v(1, 0), v(1, 1)});
    auto b = Cone2D::from_generators({v(1, 1), v(0, 1)});
    CHECK(intersect(a, a) == a);
    auto r = intersect(a, b);
    CHECK(r.kind() == ConeKind::Ray);
    CHECK(r.generators() == std::vector<Vec2>{v(1, 1)});
    auto c = Cone2D::from_generators({v(-1, 0), v(-1, -1)});
    CHECK(intersect(a, c).kind() == ConeKind::Point);
    CHECK(intersect(Cone2D::plane(), a) == a);
}

TEST_CASE("random cones agree with brute-force membership") {
    Rng rng(31);
    for (int round = 0; round < 300; ++round) {
        std::vector<Vec2> gens(rng.index(5));
        for (auto& g : gens) g = v(rng.uniform(-3, 3), rng.uniform(-3, 3));
        auto cone = Cone2D::from_generators(gens);
        CHECK(Cone2D::from_generators(cone.spanning_rays()) == cone);
        CHECK(Cone2D::from_constraints(cone.normals()) == cone);
        std::vector<Vec2> gens2(rng.index(4));
        for (auto& g : gens2) g = v(rng.uniform(-3, 3), rng.uniform(-3, 3));
        auto other = Cone2D::from_generators(gens2);
        auto meet = intersect(cone, other);
        auto join = sum(cone, other);
        auto all = gens;
        all.insert(all.end(), gens2.begin(), gens2.end());
        for (int k = 0; k < 30; ++k) {
            Vec2 x = v(rng.uniform(-5, 5), rng.uniform(-5, 5));
            CHECK(cone.contains(x) == in_conic_hull(gens, x));
            CHECK(meet.contains(x) == (cone.contains(x) && other.contains(x)));
            CHECK(join.contains(x) == in_conic_hull(all, x));
        }
    }
}
