#include "vass/fourier_motzkin.hpp"

#include <algorithm>
#include <utility>

namespace vass::fm {

namespace {

mpz_class row_gcd(const std::vector<mpz_class>& coeffs, const mpz_class& bound) {
    mpz_class g = abs(bound);
    for (const auto& c : coeffs) g = gcd(g, c);
    return g;
}

bool all_zero(const std::vector<mpz_class>& coeffs) {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c == 0; });
}

} // namespace

void System::add(Inequality ineq) {
    if (!insert(std::move(ineq))) contradiction_ = true;
}

void System::add(Equality eq) {
    if (all_zero(eq.coeffs)) {
        if (eq.bound != 0) contradiction_ = true;
        return;
    }
    eqs_.push_back(std::move(eq));
}

bool System::insert(Inequality ineq) {
    if (all_zero(ineq.coeffs)) return ineq.bound >= 0;
    const mpz_class g = row_gcd(ineq.coeffs, ineq.bound);
    if (g > 1) {
        for (auto& c : ineq.coeffs) c /= g;
        ineq.bound /= g;
    }
    auto it = std::find_if(ineqs_.begin(), ineqs_.end(),
                           [&](const Inequality& other) { return other.coeffs == ineq.coeffs; });
    if (it == ineqs_.end()) {
        ineqs_.push_back(std::move(ineq));
    } else if (ineq.bound < it->bound) {
        it->bound = ineq.bound;
    }
    return true;
}

bool System::substitute_equalities(const std::vector<bool>& keep) {
    while (!eqs_.empty()) {
        Equality eq = std::move(eqs_.back());
        eqs_.pop_back();
        std::size_t pivot = num_vars_;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (eq.coeffs[v] != 0 && !keep[v]) {
                pivot = v;
                break;
            }
        }
        if (pivot == num_vars_) {
            if (all_zero(eq.coeffs)) {
                if (eq.bound != 0) return false;
                continue;
            }
            // Only kept variables remain: represent as a pair of inequalities.
            Inequality le{eq.coeffs, eq.bound};
            Inequality ge{eq.coeffs, -eq.bound};
            for (auto& c : ge.coeffs) c = -c;
            if (!insert(std::move(le)) || !insert(std::move(ge))) return false;
            continue;
        }
        const mpz_class e = eq.coeffs[pivot];
        const mpz_class scale = abs(e);
        const int sign = sgn(e);
        auto eliminate_from = [&](std::vector<mpz_class>& coeffs, mpz_class& bound) {
            const mpz_class a = coeffs[pivot];
            if (a == 0) return;
            for (std::size_t v = 0; v < num_vars_; ++v) coeffs[v] = scale * coeffs[v] - sign * a * eq.coeffs[v];
            bound = scale * bound - sign * a * eq.bound;
        };
        std::vector<Inequality> old = std::move(ineqs_);
        ineqs_.clear();
        for (auto& ineq : old) {
            eliminate_from(ineq.coeffs, ineq.bound);
            if (!insert(std::move(ineq))) return false;
        }
        for (auto& other : eqs_) eliminate_from(other.coeffs, other.bound);
    }
    return true;
}

bool System::eliminate(std::size_t var) {
    std::vector<Inequality> pos;
    std::vector<Inequality> neg;
    std::vector<Inequality> rest;
    for (auto& ineq : ineqs_) {
        const int s = sgn(ineq.coeffs[var]);
        if (s > 0) pos.push_back(std::move(ineq));
        else if (s < 0) neg.push_back(std::move(ineq));
        else rest.push_back(std::move(ineq));
    }
    ineqs_ = std::move(rest);
    for (const auto& p : pos) {
        for (const auto& n : neg) {
            const mpz_class mp = -n.coeffs[var];
            const mpz_class mn = p.coeffs[var];
            Inequality combined;
            combined.coeffs.resize(num_vars_);
            for (std::size_t v = 0; v < num_vars_; ++v) combined.coeffs[v] = mp * p.coeffs[v] + mn * n.coeffs[v];
            combined.coeffs[var] = 0;
            combined.bound = mp * p.bound + mn * n.bound;
            if (!insert(std::move(combined))) return false;
        }
    }
    return true;
}

bool System::eliminate_all_but(const std::vector<bool>& keep) {
    if (contradiction_) return false;
    if (!substitute_equalities(keep)) {
        contradiction_ = true;
        return false;
    }
    std::vector<bool> done = keep;
    for (;;) {
        // Pick the variable producing the fewest new constraints.
        std::size_t best = num_vars_;
        long long best_cost = 0;
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (done[v]) continue;
            long long p = 0;
            long long n = 0;
            for (const auto& ineq : ineqs_) {
                const int s = sgn(ineq.coeffs[v]);
                p += s > 0;
                n += s < 0;
            }
            const long long cost = p * n - p - n;
            if (best == num_vars_ || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best == num_vars_) break;
        done[best] = true;
        if (!eliminate(best)) {
            contradiction_ = true;
            return false;
        }
    }
    return true;
}

bool System::feasible() const {
    System copy = *this;
    return copy.eliminate_all_but(std::vector<bool>(num_vars_, false));
}

std::optional<mpq_class> minimize(System system, std::size_t var) {
    std::vector<bool> keep(system.num_vars(), false);
    keep[var] = true;
    if (!system.eliminate_all_but(keep)) return std::nullopt;
    std::optional<mpq_class> lower;
    std::optional<mpq_class> upper;
    for (const auto& ineq : system.inequalities()) {
        const mpz_class& a = ineq.coeffs[var];
        mpq_class value(ineq.bound, a);
        value.canonicalize();
        if (a < 0) {
            if (!lower || value > *lower) lower = value;
        } else if (a > 0) {
            if (!upper || value < *upper) upper = value;
        }
    }
    if (!lower) return std::nullopt;
    if (upper && *upper < *lower) return std::nullopt;
    return lower;
}

} // namespace vass::fm
