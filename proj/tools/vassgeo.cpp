#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vass/certify.hpp"
#include "vass/generate.hpp"
#include "vass/geodim.hpp"
#include "vass/io.hpp"
#include "vass/projection.hpp"
#include "vass/reach.hpp"

using namespace vass;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Precondition, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Precondition, "cannot write '" + path + "'");
    out << text;
}

std::string join_commas(const IntVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out;
}

SrpWitness thick_witness(const Vass& g, const ThickDocument& doc) {
    const Subspace cyc = cycle_space_basis(g);
    if (cyc.rank() != 2) throw Error(ErrorCode::WrongGdim, "thick certificates need gdim 2");
    const Orthant z = Orthant::nonnegative(g.dim());
    if (doc.witness) {
        const auto basis = cyc.integer_basis();
        auto [i1, i2] = *doc.witness;
        auto [u1, u2] = canonical_vectors(basis[0], basis[1], i1, i2, z);
        return SrpWitness{i1, i2, u1, u2};
    }
    auto w = find_srp(cyc, z);
    if (!w) throw Error(ErrorCode::NotSignReflecting, "the cycle space has no sign-reflecting projection");
    return *w;
}

std::string reduction_document(const ReductionOutput& r) {
    return "# length map: " + r.length_map.describe() + "\n" +
           serialize(r.vass, {{"source", r.source}, {"target", r.target}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric-dimension analysis of vector addition systems with states"};
    app.require_subcommand(1);

    std::string file;
    std::string out;
    std::string from;
    std::string to;

    auto* gdim_cmd = app.add_subcommand("gdim", "Print the geometric dimension");
    gdim_cmd->add_option("file", file)->required();

    auto* basis_cmd = app.add_subcommand("basis", "Print the canonical basis of the cycle space");
    basis_cmd->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Proper (with a sign-reflecting projection) or degenerate");
    classify_cmd->add_option("file", file)->required();

    bool full = false;
    auto* project_cmd = app.add_subcommand("project-support", "Write the support projection");
    project_cmd->add_option("file", file)->required();
    project_cmd->add_option("-o", out)->required();
    project_cmd->add_flag("--full", full, "Keep every folded state instead of the reachable part");

    auto* zero_cmd = app.add_subcommand("reduce-zero", "Reduce to 0-reachability");
    auto* three_cmd = app.add_subcommand("reduce-3to2", "Reduce a 3-VASS of gdim <= 2 to dimension 2");
    for (auto* cmd : {zero_cmd, three_cmd}) {
        cmd->add_option("file", file)->required();
        cmd->add_option("--from", from)->required();
        cmd->add_option("--to", to)->required();
        cmd->add_option("-o", out)->required();
    }

    std::string strategy = "auto";
    std::size_t max_len = 64;
    unsigned long norm_cap = 32;
    unsigned exp_const = 1;
    auto* reach_cmd = app.add_subcommand("reach", "Decide p(u) ->* q(v); exit 0 reachable, 1 unreachable, 2 unknown");
    reach_cmd->add_option("file", file)->required();
    reach_cmd->add_option("--from", from)->required();
    reach_cmd->add_option("--to", to)->required();
    reach_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "geo0", "bounded", "oracle"}));
    reach_cmd->add_option("--max-len", max_len);
    reach_cmd->add_option("--norm-cap", norm_cap);
    reach_cmd->add_option("--exp-const", exp_const, "Exponent constant of the length bound; 1 truncates the theoretical bound");

    std::string run_file;
    std::string cert_file;
    std::string kind;
    auto* cert_cmd = app.add_subcommand("check-cert", "Check a thin or thick certificate; exit 0 accept, 1 reject");
    cert_cmd->add_option("file", file)->required();
    cert_cmd->add_option("--run", run_file)->required();
    cert_cmd->add_option("--cert", cert_file)->required();
    cert_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"thin", "thick"}));

    GeneratorParams params;
    std::size_t target_gdim = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Write a deterministic random instance");
    gen_cmd->add_option("--dim", params.dim)->required();
    gen_cmd->add_option("--states", params.num_states)->required();
    gen_cmd->add_option("--trans", params.num_transitions)->required();
    gen_cmd->add_option("--norm", params.max_norm)->required();
    gen_cmd->add_option("--seed", params.seed)->required();
    auto* gdim_opt = gen_cmd->add_option("--gdim", target_gdim);
    gen_cmd->add_option("-o", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*gen_cmd) {
            if (*gdim_opt) params.target_gdim = target_gdim;
            write_file(out, serialize(generate(params)));
            return 0;
        }

        const VassDocument doc = parse_vass(read_file(file));
        const Vass& g = doc.vass;

        if (*gdim_cmd) {
            std::cout << gdim(g) << "\n";
        } else if (*basis_cmd) {
            const Subspace cyc = cycle_space_basis(g);
            for (const auto& row : cyc.rows()) {
                for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << to_string(row[i]);
                std::cout << "\n";
            }
        } else if (*classify_cmd) {
            const Subspace cyc = cycle_space_basis(g);
            if (is_proper(cyc)) {
                const auto w = find_srp(cyc, Orthant::nonnegative(g.dim()));
                if (!w) throw Error(ErrorCode::NotSignReflecting, "no sign-reflecting pair found");
                std::cout << "proper i1=" << w->i1 + 1 << " i2=" << w->i2 + 1 << " u1=" << join_commas(w->u1)
                          << " u2=" << join_commas(w->u2) << "\n";
            } else {
                std::cout << "degenerate case=" << to_string(degenerate_thinness(g).kind) << "\n";
            }
        } else if (*project_cmd) {
            write_file(out, serialize(support_projection(g, !full).vass));
        } else if (*zero_cmd || *three_cmd) {
            const ReachQuery q{g, doc.config(from), doc.config(to)};
            write_file(out, reduction_document(*zero_cmd ? reduce_to_zero_reach(q) : reduce_3vass_to_2vass(q)));
        } else if (*reach_cmd) {
            const ReachQuery q{g, doc.config(from), doc.config(to)};
            ReachAnswer ans;
            if (strategy == "geo0") {
                ans = decide_geo0(q);
            } else if (strategy == "bounded") {
                ans = bounded_reach(q, max_len);
            } else if (strategy == "oracle") {
                ans = oracle_reach(q, norm_cap);
            } else {
                ReachBudget budget;
                budget.max_len = max_len;
                budget.norm_cap = norm_cap;
                budget.exp_const = exp_const;
                ans = decide_reach(q, budget);
            }
            std::cout << to_string(ans.verdict) << "\n";
            if (ans.witness) {
                for (std::size_t k = 0; k < ans.witness->size(); ++k) std::cout << (k ? " " : "") << (*ans.witness)[k];
                std::cout << "\n";
            }
            std::cerr << ans.bound_used << "\n";
            return ans.verdict == Verdict::Reachable ? 0 : ans.verdict == Verdict::Unreachable ? 1 : 2;
        } else if (*cert_cmd) {
            const Run run = parse_run(read_file(run_file), g);
            CheckResult result;
            if (kind == "thin") {
                result = check_thin(g, run, parse_thin_certificate(read_file(cert_file), g.dim()));
            } else {
                const ThickDocument td = parse_thick_certificate(read_file(cert_file));
                result = check_thick(g, run, td.certificate, thick_witness(g, td));
            }
            std::cout << result.describe() << "\n";
            return result ? 0 : 1;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
