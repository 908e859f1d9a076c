#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vass/core.hpp"
#include "vass/geom.hpp"
#include "vass/projection.hpp"

namespace vass {

/// Enabled at c: the path executes from c.
bool is_enabled(const Vass& g, std::span<const TransitionId> path, const Configuration& c);

/// Enabled at c after padding the coordinates outside S arbitrarily. Since
/// padding can be as large as needed, only coordinates in S constrain: for
/// each i in S, c(i) plus the minimal prefix effect on i is nonnegative.
/// Throws NotAPath, and StateMismatch when the path does not leave c.state.
bool s_enabled(const Vass& g, std::span<const TransitionId> path, const Configuration& c,
               const std::vector<std::size_t>& s);

struct ThinCertificate {
    Integer a;
    std::vector<Beam> beams;
};

struct SeqEnabledCertificate {
    Integer a;
    /// Prefix lengths k1 <= k2 <= k3 <= k4 cutting rho into rho_1 .. rho_5.
    std::array<std::size_t, 4> split{};
    std::array<std::vector<TransitionId>, 4> cycles;
};

struct ThickCertificate {
    Integer a;
    /// tau = rho rho' with |rho| = split.
    std::size_t split = 0;
    SeqEnabledCertificate forward;
    /// Certificate for rev(rho') in the reverse VASS.
    SeqEnabledCertificate backward;
};

enum class Clause {
    None,
    BeamBound,
    Coverage,
    SharedA,
    ThickSplit,
    Split,
    CycleShape,
    Lengths,
    Pi1SemiPositive,
    Pi1Enabled,
    Rho1Bound,
    Pi2Enabled,
    Rho2Bound,
    SeqConePositive,
    Pi3Enabled,
    Pi4Enabled,
    NonTrivial,
};

std::string_view to_string(Clause clause);

enum class Side { None, Forward, Backward };

std::string_view to_string(Side side);

struct CheckResult {
    bool accepted = true;
    Clause clause = Clause::None;
    Side side = Side::None;
    std::string detail;

    explicit operator bool() const noexcept { return accepted; }
    /// "accept" or "reject <side> <clause>: <detail>".
    [[nodiscard]] std::string describe() const;
};

/// Every configuration of the run lies in some certificate beam, and every
/// beam is an A-beam. Throws Precondition for an invalid run.
CheckResult check_thin(const Vass& g, const Run& run, const ThinCertificate& cert);

/// The A-sequential-enablement conditions on `run`, reporting the first
/// violated clause. Throws Precondition for an invalid run and
/// VectorOutsidePlane when a cycle effect leaves the witness plane.
CheckResult check_seq_enabled(const Vass& g, const Run& run, const SeqEnabledCertificate& cert,
                              const SrpWitness& witness);

/// A-thickness of a 0-run: forward certificate on rho, backward certificate on
/// rev(rho') in the reverse VASS, and a nontrivial intersection of the two
/// sequential cones. Throws Precondition unless `run` is a valid 0-run.
CheckResult check_thick(const Vass& g, const Run& run, const ThickCertificate& cert, const SrpWitness& witness);

enum class DegenerateCase { LowRank, NullCap, RayCap };

/// "i", "ii" or "iii".
std::string_view to_string(DegenerateCase c);

struct DegenerateClassification {
    DegenerateCase kind;
    /// For RayCap, the primitive generator of Cyc(G) n Q^d_{>=0}; for LowRank
    /// with rank 1, the primitive generator of Cyc(G); empty otherwise.
    IntVector direction;
    ThinCertificate certificate;
};

/// The three degenerate cases with a beam family covering every 0-run.
/// Throws GdimTooHigh when gdim(G) > 2 and NotDegenerate when G is proper.
DegenerateClassification degenerate_thinness(const Vass& g);

} // namespace vass
