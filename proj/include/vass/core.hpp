#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vass/error.hpp"

namespace vass {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using StateId = std::size_t;
using TransitionId = std::size_t;

// ---------------------------------------------------------------------------
// Integer vector helpers
// ---------------------------------------------------------------------------

IntVector zero_vector(std::size_t dim);
/// Max-norm; 0 for the empty vector.
Integer norm(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
bool is_nonnegative(const IntVector& v);
/// Indices with a nonzero entry.
std::vector<std::size_t> support(const IntVector& v);
/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
std::string to_string(const IntVector& v);
IntVector make_vector(std::initializer_list<long> entries);

// ---------------------------------------------------------------------------
// Model
// ---------------------------------------------------------------------------

struct Transition {
    StateId src = 0;
    IntVector effect;
    StateId dst = 0;

    bool operator==(const Transition&) const = default;
};

/// A d-VASS. States are identified by their index; names are kept for I/O.
/// Transitions keep insertion order and duplicates, so a transition is
/// identified by its index.
class Vass {
public:
    explicit Vass(std::size_t dim = 0) : dim_(dim) {}

    StateId add_state(std::string name);
    TransitionId add_transition(StateId src, IntVector effect, StateId dst);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t num_transitions() const noexcept { return transitions_.size(); }
    [[nodiscard]] const std::vector<std::string>& state_names() const noexcept { return names_; }
    [[nodiscard]] const std::string& state_name(StateId s) const { return names_.at(s); }
    [[nodiscard]] std::optional<StateId> find_state(const std::string& name) const;
    [[nodiscard]] const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    [[nodiscard]] const Transition& transition(TransitionId t) const { return transitions_.at(t); }
    /// ||T||, 0 when there are no transitions.
    [[nodiscard]] Integer max_norm() const;
    /// Outgoing transition indices per state, in index order.
    [[nodiscard]] std::vector<std::vector<TransitionId>> out_edges() const;

    bool operator==(const Vass&) const = default;

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Transition> transitions_;
};

struct Configuration {
    StateId state = 0;
    IntVector counters;

    bool operator==(const Configuration&) const = default;
};

struct Run {
    Configuration start;
    std::vector<TransitionId> word;
};

/// Sum of the effects along `word`; throws NotAPath unless consecutive
/// transitions are adjacent.
IntVector effect(const Vass& g, std::span<const TransitionId> word);

/// Throws NotAPath when `word` is not a path (or does not leave `start_state`
/// when given).
void check_path(const Vass& g, std::span<const TransitionId> word,
                std::optional<StateId> start_state = std::nullopt);

/// The full configuration sequence of the run, or nullopt as soon as a
/// counter would become negative.
std::optional<std::vector<Configuration>> execute(const Vass& g, const Configuration& start,
                                                  std::span<const TransitionId> word);

/// Transition i of the result is transition i of `g` reversed and negated.
Vass reverse(const Vass& g);

/// The reverse run in reverse(g); throws Precondition when `run` is not a
/// valid run of `g`.
Run reverse_run(const Vass& g, const Run& run);

/// Maximal number of distinct states a single path can visit.
std::size_t traversal_number(const Vass& g);

/// traversal_number(g) * ||T||.
Integer characteristic(const Vass& g);

class Subspace;

/// Checks that every configuration of `run` at a state q lies in the coset
/// v_q + span(basis), and that the first visit v_q is within max-norm
/// distance characteristic(g) of start + span(basis).
bool check_run_coset_invariant(const Vass& g, const Run& run, const Subspace& basis);

} // namespace vass
