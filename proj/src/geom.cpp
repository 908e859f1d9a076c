#include "vass/geom.hpp"

#include <optional>

#include "vass/fourier_motzkin.hpp"

namespace vass {

bool in_beam(const IntVector& u, const IntVector& v, const Integer& width, bool allow_negative_alpha) {
    if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "point and direction differ in dimension");
    if (!is_nonnegative(u)) return false;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    if (!allow_negative_alpha) lo = Rational(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] == 0) {
            if (abs(u[i]) > width) return false;
            continue;
        }
        Rational a = make_rational(u[i] - width, v[i]);
        Rational b = make_rational(u[i] + width, v[i]);
        if (v[i] < 0) std::swap(a, b);
        if (!lo || a > *lo) lo = a;
        if (!hi || b < *hi) hi = b;
    }
    return !lo || !hi || *lo <= *hi;
}

bool in_beam(const IntVector& u, const Beam& beam) { return in_beam(u, beam.direction, beam.width); }

std::pair<Beam, Beam> split_generalized_beam(const IntVector& v, const Integer& width) {
    IntVector plus(v.size());
    IntVector minus(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        plus[i] = v[i] >= 0 ? Integer(v[i]) : Integer(0);
        minus[i] = v[i] <= 0 ? Integer(-v[i]) : Integer(0);
    }
    return {Beam{plus, width}, Beam{minus, width}};
}

Rational min_ray_distance(const IntVector& u, const IntVector& v) {
    if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "point and direction differ in dimension");
    if (is_zero(v)) throw Error(ErrorCode::ZeroDirection, "direction must be nonzero");
    std::vector<Rational> candidates;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] != 0) candidates.push_back(make_rational(u[i], v[i]));
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            // u(i) - a v(i) = s (u(j) - a v(j))
            for (int s : {1, -1}) {
                const Integer den = v[i] - s * v[j];
                if (den != 0) candidates.push_back(make_rational(u[i] - s * u[j], den));
            }
        }
    }
    std::optional<Rational> best;
    for (const auto& alpha : candidates) {
        Rational worst = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            Rational r = abs(Rational(u[i]) - alpha * v[i]);
            if (r > worst) worst = r;
        }
        if (!best || worst < *best) best = worst;
    }
    return *best;
}

// ---------------------------------------------------------------------------

namespace {

void require_plane(const Subspace& plane) {
    if (plane.rank() != 2) throw Error(ErrorCode::Precondition, "cones live in a plane (rank 2)");
}

std::vector<IntVector> lift_all(const Subspace& plane, const std::vector<Vec2>& chart_vectors) {
    std::vector<IntVector> out;
    out.reserve(chart_vectors.size());
    for (const auto& c : chart_vectors) out.push_back(primitive_integer(combine(plane, QVector{c.x, c.y})));
    return out;
}

} // namespace

Cone2 Cone2::from_generators(const Subspace& plane, const std::vector<QVector>& generators) {
    require_plane(plane);
    std::vector<Vec2> chart;
    for (const auto& g : generators) {
        auto c = coordinates(g, plane);
        if (!c) throw Error(ErrorCode::VectorOutsidePlane, "generator " + to_string(g) + " is not in the plane");
        chart.push_back(Vec2{(*c)[0], (*c)[1]});
    }
    return Cone2(plane, Cone2D::from_generators(chart));
}

Cone2 Cone2::from_generators(const Subspace& plane, const std::vector<IntVector>& generators) {
    std::vector<QVector> q;
    for (const auto& g : generators) q.push_back(to_rational(g));
    return from_generators(plane, q);
}

std::vector<IntVector> Cone2::generators() const { return lift_all(plane_, chart_.generators()); }
std::vector<IntVector> Cone2::spanning_rays() const { return lift_all(plane_, chart_.spanning_rays()); }

bool Cone2::contains(const QVector& v) const {
    auto c = coordinates(v, plane_);
    return c && chart_.contains(Vec2{(*c)[0], (*c)[1]});
}

bool Cone2::contains(const IntVector& v) const { return contains(to_rational(v)); }

Cone2 cone_intersect(const Cone2& a, const Cone2& b) {
    if (!(a.plane() == b.plane())) throw Error(ErrorCode::PlaneMismatch, "cones lie in different planes");
    return Cone2(a.plane(), intersect(a.chart(), b.chart()));
}

Subspace witness_plane(const SrpWitness& w) {
    return span_basis(std::vector<IntVector>{w.u1, w.u2}, w.u1.size());
}

Cone2 seqcone(const std::vector<IntVector>& vectors, const SrpWitness& witness) {
    const Subspace plane = witness_plane(witness);
    const Cone2D quadrant = Cone2D::from_generators({{1, 0}, {0, 1}});
    Cone2D current;
    for (const auto& v : vectors) {
        if (!in_span(v, plane)) throw Error(ErrorCode::VectorOutsidePlane, to_string(v) + " is not in the plane");
        current = intersect(sum(current, Cone2D::from_generators({project(witness, v)})), quadrant);
    }
    std::vector<QVector> lifted;
    for (const auto& r : current.spanning_rays()) lifted.push_back(lift_from_projection(witness, r));
    return Cone2::from_generators(plane, lifted);
}

bool seqcone_member_oracle(const std::vector<IntVector>& vectors, const QVector& target) {
    const std::size_t k = vectors.size();
    if (k > seqcone_oracle_cap) {
        throw Error(ErrorCode::TooLarge, std::to_string(k) + " vectors exceed the oracle cap");
    }
    const std::size_t d = target.size();
    for (const auto& v : vectors) {
        if (v.size() != d) throw Error(ErrorCode::DimensionMismatch, "vector and target differ in dimension");
    }
    fm::System system(k);
    for (std::size_t j = 0; j < k; ++j) {
        fm::Inequality nonneg{std::vector<mpz_class>(k, 0), 0};
        nonneg.coeffs[j] = -1;
        system.add(std::move(nonneg));
    }
    for (std::size_t m = 1; m <= k; ++m) {
        for (std::size_t i = 0; i < d; ++i) {
            fm::Inequality prefix{std::vector<mpz_class>(k, 0), 0};
            for (std::size_t j = 0; j < m; ++j) prefix.coeffs[j] = -vectors[j][i];
            system.add(std::move(prefix));
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        fm::Equality eq{std::vector<mpz_class>(k, 0), target[i].get_num()};
        for (std::size_t j = 0; j < k; ++j) eq.coeffs[j] = vectors[j][i] * target[i].get_den();
        system.add(std::move(eq));
    }
    return system.feasible();
}

bool seqcone_member_oracle(const std::vector<IntVector>& vectors, const IntVector& target) {
    return seqcone_member_oracle(vectors, to_rational(target));
}

Vec2 right_rotation(const Vec2& v) { return Vec2{v.y, -v.x}; }
bool rot_strict(const Vec2& a, const Vec2& b) { return dot(b, right_rotation(a)) > 0; }
bool rot_weak(const Vec2& a, const Vec2& b) { return dot(b, right_rotation(a)) >= 0; }

bool rot_membership(const IntVector& u, const IntVector& v, const IntVector& w, const SrpWitness& witness) {
    const Subspace plane = witness_plane(witness);
    for (const auto* x : {&u, &v, &w}) {
        if (!in_span(*x, plane)) throw Error(ErrorCode::VectorOutsidePlane, to_string(*x) + " is not in the plane");
    }
    Vec2 pu = project(witness, u);
    Vec2 pv = project(witness, v);
    const Vec2 pw = project(witness, w);
    if (!rot_strict(pu, pv)) {
        if (!rot_strict(pv, pu)) throw Error(ErrorCode::NotStrictRotation, "u and v are parallel");
        std::swap(pu, pv);
    }
    return rot_weak(pu, pw) && rot_weak(pw, pv);
}

} // namespace vass
