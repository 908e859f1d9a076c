#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace vass::fm {

/// coeffs . x <= bound, integer coefficients.
struct Inequality {
    std::vector<mpz_class> coeffs;
    mpz_class bound;
};

/// coeffs . x == bound
struct Equality {
    std::vector<mpz_class> coeffs;
    mpz_class bound;
};

/// A rational polyhedron {x in Q^n : A x <= b, E x = f}. Elimination keeps
/// every constraint normalized (content 1) and drops parallel duplicates,
/// keeping the tightest bound.
class System {
public:
    explicit System(std::size_t num_vars) : num_vars_(num_vars) {}

    void add(Inequality ineq);
    void add(Equality eq);

    [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }

    /// Eliminates every variable except those flagged in `keep`. Returns false
    /// when a contradiction 0 <= negative is derived.
    bool eliminate_all_but(const std::vector<bool>& keep);

    [[nodiscard]] bool feasible() const;
    [[nodiscard]] const std::vector<Inequality>& inequalities() const noexcept { return ineqs_; }

private:
    bool substitute_equalities(const std::vector<bool>& keep);
    bool eliminate(std::size_t var);
    bool insert(Inequality ineq);

    std::size_t num_vars_;
    std::vector<Inequality> ineqs_;
    std::vector<Equality> eqs_;
    bool contradiction_ = false;
};

/// Minimizes x[var] over a nonempty polyhedron bounded below in that
/// variable. Returns nullopt when infeasible or unbounded below.
std::optional<mpq_class> minimize(System system, std::size_t var);

} // namespace vass::fm
