#include "vass/certify.hpp"

#include <algorithm>

#include "vass/geodim.hpp"

namespace vass {

namespace {

void require_start(const Vass& g, std::span<const TransitionId> path, const Configuration& c) {
    check_path(g, path);
    if (!path.empty() && g.transition(path.front()).src != c.state) {
        throw Error(ErrorCode::StateMismatch, "path does not leave state '" + g.state_name(c.state) + "'");
    }
}

CheckResult reject(Clause clause, std::string detail) { return CheckResult{false, clause, Side::None, std::move(detail)}; }

bool is_cycle(const Vass& g, const std::vector<TransitionId>& cycle) {
    if (cycle.empty()) return false;
    for (TransitionId t : cycle) {
        if (t >= g.num_transitions()) return false;
    }
    for (std::size_t k = 1; k < cycle.size(); ++k) {
        if (g.transition(cycle[k - 1]).dst != g.transition(cycle[k]).src) return false;
    }
    return g.transition(cycle.back()).dst == g.transition(cycle.front()).src;
}

bool starts_at(const Vass& g, const std::vector<TransitionId>& cycle, const Configuration& c) {
    return g.transition(cycle.front()).src == c.state;
}

std::vector<Configuration> execute_or_throw(const Vass& g, const Run& run) {
    auto configs = execute(g, run.start, run.word);
    if (!configs) throw Error(ErrorCode::Precondition, "the run is not valid in the VASS");
    return *configs;
}

bool bounded(const std::vector<Configuration>& configs, std::size_t from, std::size_t to, std::size_t i,
             const Integer& a) {
    for (std::size_t k = from; k <= to; ++k) {
        if (configs[k].counters[i] > a) return false;
    }
    return true;
}

Integer power(Integer base, std::size_t e) {
    Integer r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= base;
    return r;
}

} // namespace

bool is_enabled(const Vass& g, std::span<const TransitionId> path, const Configuration& c) {
    require_start(g, path, c);
    return execute(g, c, path).has_value();
}

bool s_enabled(const Vass& g, std::span<const TransitionId> path, const Configuration& c,
               const std::vector<std::size_t>& s) {
    require_start(g, path, c);
    if (c.counters.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "configuration dimension");
    IntVector running = c.counters;
    for (std::size_t i : s) {
        if (i >= g.dim()) throw Error(ErrorCode::BadIndices, "index outside the dimension");
        if (running[i] < 0) return false;
    }
    for (TransitionId t : path) {
        const auto& e = g.transition(t).effect;
        for (std::size_t i : s) {
            running[i] += e[i];
            if (running[i] < 0) return false;
        }
    }
    return true;
}

std::string_view to_string(Clause clause) {
    switch (clause) {
    case Clause::None: return "none";
    case Clause::BeamBound: return "every beam is an A-beam";
    case Clause::Coverage: return "every configuration belongs to some beam";
    case Clause::SharedA: return "both sub-certificates share A";
    case Clause::ThickSplit: return "tau factors into rho rho'";
    case Clause::Split: return "rho factors into five parts";
    case Clause::CycleShape: return "pi_1..pi_4 are cycles";
    case Clause::Lengths: return "lengths are at most A";
    case Clause::Pi1SemiPositive: return "Delta(pi_1)|_I is semi-positive";
    case Clause::Pi1Enabled: return "pi_1 is enabled at trg(rho_1)";
    case Clause::Rho1Bound: return "coordinates in I are bounded by A along rho_1";
    case Clause::Pi2Enabled: return "pi_2 is S-enabled at trg(rho_2)";
    case Clause::Rho2Bound: return "coordinate i_b is bounded by A along rho_2";
    case Clause::SeqConePositive: return "SeqCone(Delta(pi_1), Delta(pi_2)) contains a positive vector";
    case Clause::Pi3Enabled: return "pi_3 is enabled at trg(rho_3)";
    case Clause::Pi4Enabled: return "pi_4 is enabled at trg(rho_4)";
    case Clause::NonTrivial: return "the sequential cones intersect nontrivially";
    }
    return "unknown";
}

std::string_view to_string(Side side) {
    switch (side) {
    case Side::None: return "";
    case Side::Forward: return "forward";
    case Side::Backward: return "backward";
    }
    return "";
}

std::string CheckResult::describe() const {
    if (accepted) return "accept";
    std::string out = "reject ";
    if (side != Side::None) out += std::string(to_string(side)) + " ";
    out += std::string(to_string(clause));
    if (!detail.empty()) out += ": " + detail;
    return out;
}

CheckResult check_thin(const Vass& g, const Run& run, const ThinCertificate& cert) {
    const auto configs = execute_or_throw(g, run);
    for (std::size_t b = 0; b < cert.beams.size(); ++b) {
        if (!cert.beams[b].is_a_beam(cert.a)) return reject(Clause::BeamBound, "beam " + std::to_string(b + 1));
        if (cert.beams[b].direction.size() != g.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "beam " + std::to_string(b + 1) + " has the wrong dimension");
        }
    }
    for (std::size_t k = 0; k < configs.size(); ++k) {
        const auto& u = configs[k].counters;
        const bool covered = std::any_of(cert.beams.begin(), cert.beams.end(),
                                         [&](const Beam& beam) { return in_beam(u, beam); });
        if (!covered) return reject(Clause::Coverage, "configuration " + std::to_string(k) + " " + to_string(u));
    }
    return {};
}

CheckResult check_seq_enabled(const Vass& g, const Run& run, const SeqEnabledCertificate& cert,
                              const SrpWitness& witness) {
    const auto configs = execute_or_throw(g, run);
    const auto& k = cert.split;
    const auto& pi = cert.cycles;
    if (!(k[0] <= k[1] && k[1] <= k[2] && k[2] <= k[3] && k[3] <= run.word.size())) {
        return reject(Clause::Split, "indices must be nondecreasing and at most " + std::to_string(run.word.size()));
    }
    for (std::size_t j = 0; j < 4; ++j) {
        if (!is_cycle(g, pi[j])) return reject(Clause::CycleShape, "pi_" + std::to_string(j + 1));
    }
    for (std::size_t j = 0; j < 4; ++j) {
        if (Integer(static_cast<unsigned long>(pi[j].size())) > cert.a) {
            return reject(Clause::Lengths, "pi_" + std::to_string(j + 1) + " has length " + std::to_string(pi[j].size()));
        }
    }

    const IntVector d1 = effect(g, pi[0]);
    const IntVector d2 = effect(g, pi[1]);
    const std::size_t i1 = witness.i1;
    const std::size_t i2 = witness.i2;
    if (d1[i1] < 0 || d1[i2] < 0 || (d1[i1] == 0 && d1[i2] == 0)) {
        return reject(Clause::Pi1SemiPositive, "Delta(pi_1) = " + to_string(d1));
    }

    const Configuration& t1 = configs[k[0]];
    if (!starts_at(g, pi[0], t1) || !execute(g, t1, pi[0])) {
        return reject(Clause::Pi1Enabled, "trg(rho_1) = " + to_string(t1.counters));
    }
    for (std::size_t i : {i1, i2}) {
        if (!bounded(configs, 0, k[0], i, cert.a)) {
            return reject(Clause::Rho1Bound, "coordinate " + std::to_string(i + 1) + " exceeds A");
        }
    }

    const Configuration& t2 = configs[k[1]];
    const bool positive = d1[i1] > 0 && d1[i2] > 0;
    if (!starts_at(g, pi[1], t2)) return reject(Clause::Pi2Enabled, "pi_2 does not start at trg(rho_2)");
    if (!positive) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (d1[i] == 0) s.push_back(i);
        }
        if (!s_enabled(g, pi[1], t2, s)) return reject(Clause::Pi2Enabled, "trg(rho_2) = " + to_string(t2.counters));
        for (std::size_t i : {i1, i2}) {
            if (d1[i] == 0 && !bounded(configs, k[0], k[1], i, cert.a)) {
                return reject(Clause::Rho2Bound, "coordinate " + std::to_string(i + 1) + " exceeds A");
            }
        }
    }

    const Cone2 cone = seqcone({d1, d2}, witness);
    std::vector<bool> covered(g.dim(), false);
    for (const auto& r : cone.spanning_rays()) {
        for (std::size_t i : support(r)) covered[i] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        return reject(Clause::SeqConePositive, std::string("SeqCone is a ") + std::string(to_string(cone.kind())));
    }

    if (!starts_at(g, pi[2], configs[k[2]])) return reject(Clause::Pi3Enabled, "pi_3 does not start at trg(rho_3)");
    if (!starts_at(g, pi[3], configs[k[3]])) return reject(Clause::Pi4Enabled, "pi_4 does not start at trg(rho_4)");
    return {};
}

CheckResult check_thick(const Vass& g, const Run& run, const ThickCertificate& cert, const SrpWitness& witness) {
    const auto configs = execute_or_throw(g, run);
    if (!is_zero(configs.front().counters) || !is_zero(configs.back().counters)) {
        throw Error(ErrorCode::Precondition, "thickness is defined for 0-runs");
    }
    if (cert.forward.a != cert.a || cert.backward.a != cert.a) {
        return reject(Clause::SharedA, "A differs between the certificates");
    }
    if (cert.split > run.word.size()) return reject(Clause::ThickSplit, "split beyond the run");

    Run rho{run.start, std::vector<TransitionId>(run.word.begin(), run.word.begin() + cert.split)};
    CheckResult forward = check_seq_enabled(g, rho, cert.forward, witness);
    if (!forward) {
        forward.side = Side::Forward;
        return forward;
    }

    const Vass rev = reverse(g);
    Run back{configs.back(), std::vector<TransitionId>(run.word.rbegin(), run.word.rend() - cert.split)};
    CheckResult backward = check_seq_enabled(rev, back, cert.backward, witness);
    if (!backward) {
        backward.side = Side::Backward;
        return backward;
    }

    std::vector<IntVector> fwd;
    std::vector<IntVector> bwd;
    for (const auto& c : cert.forward.cycles) fwd.push_back(effect(g, c));
    for (const auto& c : cert.backward.cycles) bwd.push_back(effect(rev, c));
    const Cone2 meet = cone_intersect(seqcone(fwd, witness), seqcone(bwd, witness));
    if (!meet.is_nontrivial()) {
        return reject(Clause::NonTrivial, std::string("intersection is a ") + std::string(to_string(meet.kind())));
    }
    return {};
}

std::string_view to_string(DegenerateCase c) {
    switch (c) {
    case DegenerateCase::LowRank: return "i";
    case DegenerateCase::NullCap: return "ii";
    case DegenerateCase::RayCap: return "iii";
    }
    return "";
}

DegenerateClassification degenerate_thinness(const Vass& g) {
    const Subspace cyc = cycle_space_basis(g);
    if (cyc.rank() > 2) throw Error(ErrorCode::GdimTooHigh, "degenerate classification needs gdim <= 2");
    const Integer chi = characteristic(g);
    const std::size_t d = g.dim();

    if (cyc.rank() < 2) {
        DegenerateClassification out{DegenerateCase::LowRank, {}, {chi, {}}};
        if (cyc.rank() == 0) {
            out.certificate.beams.push_back(Beam{zero_vector(d), chi});
        } else {
            out.direction = cyc.integer_basis()[0];
            auto [plus, minus] = split_generalized_beam(out.direction, chi);
            out.certificate.beams = {plus, minus};
        }
        return out;
    }

    const Cone2D cap = orthant_cone_in_chart(cyc, Orthant::nonnegative(d));
    if (cap.is_nontrivial()) throw Error(ErrorCode::NotDegenerate, "the VASS is proper");
    if (cap.kind() == ConeKind::Point) {
        const Integer b = 2 * power((d + 6) * chi + 1, d) * chi + chi;
        return DegenerateClassification{DegenerateCase::NullCap, {}, {b, {Beam{zero_vector(d), b}}}};
    }
    const Vec2 ray = cap.generators().front();
    IntVector u = primitive_integer(combine(cyc, QVector{ray.x, ray.y}));
    const Integer qt = Integer(static_cast<unsigned long>(g.num_states())) * g.max_norm();
    const Integer a = 2 * power((d + 3) * qt + 2, d) * qt;
    return DegenerateClassification{DegenerateCase::RayCap, u, {a, {Beam{u, a}}}};
}

} // namespace vass
