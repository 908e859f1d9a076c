#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vass/core.hpp"

namespace vass {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// num / den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
QVector to_rational(const IntVector& v);
/// Smallest positive multiple of v with integer entries and content 1.
IntVector primitive_integer(const QVector& v);
std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

/// A linear subspace of Q^d stored in reduced row-echelon form, so equal
/// subspaces compare equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    /// RREF rows: pivot entries equal 1 and pivot columns are otherwise zero.
    [[nodiscard]] const std::vector<QVector>& rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// The RREF rows scaled to primitive integer vectors.
    [[nodiscard]] std::vector<IntVector> integer_basis() const;
    /// Union of the supports of the basis rows.
    [[nodiscard]] std::vector<std::size_t> support() const;

    bool operator==(const Subspace&) const = default;

    friend Subspace span_rational(std::span<const QVector> vectors, std::size_t ambient);

private:
    std::size_t ambient_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of span(vectors); throws DimensionMismatch when a vector
/// does not have `ambient` entries.
Subspace span_basis(std::span<const IntVector> vectors, std::size_t ambient);
Subspace span_rational(std::span<const QVector> vectors, std::size_t ambient);

bool in_span(const QVector& v, const Subspace& s);
bool in_span(const IntVector& v, const Subspace& s);
/// Coefficients with respect to rows(), when v lies in the span.
std::optional<QVector> coordinates(const QVector& v, const Subspace& s);
std::optional<QVector> coordinates(const IntVector& v, const Subspace& s);
/// sum_j coeffs[j] * rows()[j]
QVector combine(const Subspace& s, const QVector& coeffs);

/// min over c in s of ||v - c|| in max-norm, solved exactly by
/// Fourier-Motzkin elimination.
Rational chebyshev_distance_to_span(const IntVector& v, const Subspace& s);

/// Determinant-free rank of a set of integer vectors.
std::size_t rank_of(std::span<const IntVector> vectors, std::size_t ambient);

} // namespace vass
