#include "vass/cone2d.hpp"

#include <algorithm>

namespace vass {

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
Vec2 operator*(const Rational& k, const Vec2& v) { return {k * v.x, k * v.y}; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
bool is_zero(const Vec2& v) { return v.x == 0 && v.y == 0; }
Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

Vec2 primitive(const Vec2& v) {
    if (is_zero(v)) return v;
    IntVector p = primitive_integer(QVector{v.x, v.y});
    return {Rational(p[0]), Rational(p[1])};
}

namespace {

int half(const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

Vec2 canonical_line(const Vec2& d) {
    Vec2 p = primitive(d);
    if (p.x < 0 || (p.x == 0 && p.y < 0)) p = -p;
    return p;
}

} // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::string_view to_string(ConeKind kind) {
    switch (kind) {
    case ConeKind::Point: return "point";
    case ConeKind::Ray: return "ray";
    case ConeKind::Line: return "line";
    case ConeKind::Salient: return "salient-cone";
    case ConeKind::Halfplane: return "halfplane";
    case ConeKind::Plane: return "full-plane";
    }
    return "unknown";
}

Cone2D Cone2D::from_generators(const std::vector<Vec2>& generators) {
    std::vector<Vec2> dirs;
    for (const auto& g : generators) {
        if (!is_zero(g)) dirs.push_back(primitive(g));
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    Cone2D c;
    if (dirs.empty()) return c;
    if (dirs.size() == 1) {
        c.kind_ = ConeKind::Ray;
        c.generators_ = dirs;
        return c;
    }

    // Gap k runs counterclockwise from dirs[k] to dirs[k+1].
    const std::size_t n = dirs.size();
    std::size_t wide = n;
    std::size_t straight = n;
    std::size_t straight_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vec2& a = dirs[k];
        const Vec2& b = dirs[(k + 1) % n];
        const Rational cr = cross(a, b);
        if (cr < 0) {
            wide = k;
        } else if (cr == 0 && dot(a, b) < 0) {
            straight = k;
            ++straight_count;
        }
    }
    if (wide != n) {
        c.kind_ = ConeKind::Salient;
        c.generators_ = {dirs[(wide + 1) % n], dirs[wide]};
    } else if (straight_count == 2 && n == 2) {
        c.kind_ = ConeKind::Line;
        c.generators_ = {canonical_line(dirs[0])};
    } else if (straight != n) {
        // The empty side is counterclockwise of dirs[straight], so the
        // interior lies clockwise of it; boundary b has the interior on its left.
        const Vec2 b = dirs[(straight + 1) % n];
        c.kind_ = ConeKind::Halfplane;
        c.generators_ = {b, perp(b)};
    } else {
        c.kind_ = ConeKind::Plane;
    }
    return c;
}

Cone2D Cone2D::from_constraints(const std::vector<Vec2>& normals) {
    std::vector<Vec2> candidates{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& n : normals) {
        if (is_zero(n)) continue;
        candidates.push_back(perp(n));
        candidates.push_back(-perp(n));
        candidates.push_back(n);
        candidates.push_back(-n);
    }
    std::vector<Vec2> feasible;
    for (const auto& c : candidates) {
        bool ok = true;
        for (const auto& n : normals) {
            if (dot(n, c) < 0) {
                ok = false;
                break;
            }
        }
        if (ok) feasible.push_back(c);
    }
    return from_generators(feasible);
}

std::vector<Vec2> Cone2D::spanning_rays() const {
    switch (kind_) {
    case ConeKind::Point: return {};
    case ConeKind::Ray: return generators_;
    case ConeKind::Line: return {generators_[0], -generators_[0]};
    case ConeKind::Salient: return generators_;
    case ConeKind::Halfplane: return {generators_[0], -generators_[0], generators_[1]};
    case ConeKind::Plane: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    }
    return {};
}

std::vector<Vec2> Cone2D::normals() const {
    switch (kind_) {
    case ConeKind::Point: return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    case ConeKind::Ray: {
        const Vec2& r = generators_[0];
        return {perp(r), -perp(r), r};
    }
    case ConeKind::Line: {
        const Vec2& d = generators_[0];
        return {perp(d), -perp(d)};
    }
    case ConeKind::Salient: {
        const Vec2& a = generators_[0];
        const Vec2& b = generators_[1];
        return {perp(a), -perp(b)};
    }
    case ConeKind::Halfplane: return {generators_[1]};
    case ConeKind::Plane: return {};
    }
    return {};
}

bool Cone2D::contains(const Vec2& v) const {
    const auto ns = normals();
    return std::all_of(ns.begin(), ns.end(), [&](const Vec2& n) { return dot(n, v) >= 0; });
}

bool Cone2D::is_nontrivial() const noexcept {
    return kind_ == ConeKind::Salient || kind_ == ConeKind::Halfplane || kind_ == ConeKind::Plane;
}

Cone2D intersect(const Cone2D& a, const Cone2D& b) {
    auto ns = a.normals();
    auto nb = b.normals();
    ns.insert(ns.end(), nb.begin(), nb.end());
    return Cone2D::from_constraints(ns);
}

Cone2D sum(const Cone2D& a, const Cone2D& b) {
    auto gs = a.spanning_rays();
    auto gb = b.spanning_rays();
    gs.insert(gs.end(), gb.begin(), gb.end());
    return Cone2D::from_generators(gs);
}

} // namespace vass
