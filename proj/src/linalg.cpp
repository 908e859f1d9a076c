#include "vass/linalg.hpp"

#include <algorithm>

#include "vass/fourier_motzkin.hpp"

namespace vass {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::Precondition, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QVector to_rational(const IntVector& v) {
    QVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

IntVector primitive_integer(const QVector& v) {
    Integer denominator_lcm = 1;
    for (const auto& q : v) denominator_lcm = lcm(denominator_lcm, Integer(q.get_den()));
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(Integer(q.get_num() * (denominator_lcm / q.get_den())));
    return primitive(out);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].get_str();
    }
    return out;
}

std::vector<IntVector> Subspace::integer_basis() const {
    std::vector<IntVector> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(primitive_integer(row));
    return out;
}

std::vector<std::size_t> Subspace::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (const auto& row : rows_) {
            if (row[i] != 0) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

Subspace span_rational(std::span<const QVector> vectors, std::size_t ambient) {
    std::vector<QVector> m;
    m.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) {
            throw Error(ErrorCode::DimensionMismatch,
                        "vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(ambient));
        }
        m.push_back(v);
    }

    Subspace s(ambient);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ambient && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational lead = m[row][col];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < ambient; ++c) m[r][c] -= factor * m[row][c];
        }
        s.pivots_.push_back(col);
        ++row;
    }
    m.resize(row);
    s.rows_ = std::move(m);
    return s;
}

Subspace span_basis(std::span<const IntVector> vectors, std::size_t ambient) {
    std::vector<QVector> rational;
    rational.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) {
            throw Error(ErrorCode::DimensionMismatch,
                        "vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(ambient));
        }
        rational.push_back(to_rational(v));
    }
    return span_rational(rational, ambient);
}

std::optional<QVector> coordinates(const QVector& v, const Subspace& s) {
    if (v.size() != s.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vector does not match the subspace's ambient dimension");
    }
    QVector coeffs;
    coeffs.reserve(s.rank());
    for (std::size_t pivot : s.pivots()) coeffs.push_back(v[pivot]);
    if (combine(s, coeffs) != v) return std::nullopt;
    return coeffs;
}

std::optional<QVector> coordinates(const IntVector& v, const Subspace& s) {
    return coordinates(to_rational(v), s);
}

bool in_span(const QVector& v, const Subspace& s) { return coordinates(v, s).has_value(); }
bool in_span(const IntVector& v, const Subspace& s) { return coordinates(v, s).has_value(); }

QVector combine(const Subspace& s, const QVector& coeffs) {
    QVector out(s.ambient_dim(), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[j] * s.rows()[j][i];
    }
    return out;
}

Rational chebyshev_distance_to_span(const IntVector& v, const Subspace& s) {
    if (v.size() != s.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vector does not match the subspace's ambient dimension");
    }
    if (s.rank() == 0) return Rational(norm(v));
    if (in_span(v, s)) return Rational(0);

    // Variables: lambda_0..lambda_{r-1}, t. For each coordinate i,
    //   v(i) - sum_j lambda_j b_j(i) <= t  and  sum_j lambda_j b_j(i) - v(i) <= t.
    const auto basis = s.integer_basis();
    const std::size_t r = basis.size();
    const std::size_t t = r;
    fm::System system(r + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        fm::Inequality upper;
        fm::Inequality lower;
        upper.coeffs.resize(r + 1);
        lower.coeffs.resize(r + 1);
        for (std::size_t j = 0; j < r; ++j) {
            upper.coeffs[j] = -basis[j][i];
            lower.coeffs[j] = basis[j][i];
        }
        upper.coeffs[t] = -1;
        lower.coeffs[t] = -1;
        upper.bound = -v[i];
        lower.bound = v[i];
        system.add(std::move(upper));
        system.add(std::move(lower));
    }
    auto best = fm::minimize(std::move(system), t);
    // The program is always feasible and t >= 0 is implied.
    return best.value_or(Rational(0));
}

std::size_t rank_of(std::span<const IntVector> vectors, std::size_t ambient) {
    return span_basis(vectors, ambient).rank();
}

} // namespace vass
