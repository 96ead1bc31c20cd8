// Command-line surface for the orbit, parameter and spectrum computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "nilorbit/corpus.hpp"
#include "nilorbit/verify.hpp"

using namespace nilorbit;
using nlohmann::json;

namespace {

json orbit_json(const Orbit& o) {
    return json{{"kind", o.kind == GroupKind::SymplecticC ? "C" : "B/D"}, {"columns", o.columns}};
}

json chain_factor_json(const ChainFactor& f) {
    return json{{"chain", f.entries},
                {"delta", f.delta == Parity::Even ? 0 : 1},
                {"eps", std::string(1, f.form == ChainFactor::Form::Signed ? sign_char(f.eps) : '+')}};
}

json parameter_json(const AttachedParameter& p) {
    json a = json::array();
    for (const auto& f : p.factors) a.push_back(chain_factor_json(f));
    return a;
}

Orbit orbit_from_args(const std::string& kind, const std::string& cols) {
    return validate(parse_kind(kind), parse_columns(cols));
}

Orbit symplectic_view(const Orbit& o) {
    return o.kind == GroupKind::SymplecticC ? o : to_symplectic(o);
}

int run_verify(const std::string& which, Column max_size, int samples) {
    VerifyResult r;
    if (which == "prop7.3" || which == "cor7.4") {
        r = verify_distinguished_sum(max_size);
    } else if (which == "cor8.5") {
        r = verify_normality_equivalence(max_size);
    } else if (which == "charformula") {
        r = verify_char_formula();
    } else if (which == "oracle") {
        r = verify_oracle(4, 5, samples);
    } else if (which == "invariants") {
        r = verify_invariants(max_size);
    } else {
        std::cerr << "unknown verification: " << which << "\n";
        return 64;
    }
    std::cout << (r.ok ? "ok" : "MISMATCH") << " " << r.name << ": " << r.cases << " checks in "
              << r.seconds << "s";
    if (!r.ok) std::cout << " -- " << r.detail;
    std::cout << "\n";
    return r.ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of classical nilpotent orbits: chains, Norm lattices,\n"
                 "attached parameters and K-type spectra."};
    app.require_subcommand(1);

    std::string kind = "C", cols, member_cols, which = "closure", ktypes = "diminutive", format = "table";
    std::string corpus_path = "data/corpus.txt", verify_what;
    bool as_json = false, distinguished_only = false;
    Column max_size = 16;
    int samples = 200;

    auto* validate_cmd = app.add_subcommand("validate", "check a column list and print its canonical form");
    validate_cmd->add_option("kind", kind, "C|B|D")->required();
    validate_cmd->add_option("columns", cols, "comma-separated columns")->required();
    validate_cmd->add_flag("--json", as_json);

    auto* chains_cmd = app.add_subcommand("chains", "chain decomposition");
    chains_cmd->add_option("kind", kind)->required();
    chains_cmd->add_option("columns", cols)->required();
    chains_cmd->add_flag("--json", as_json);

    auto* normal_cmd = app.add_subcommand("normal", "Kraft-Procesi normality of the closure");
    normal_cmd->add_option("kind", kind)->required();
    normal_cmd->add_option("columns", cols)->required();
    normal_cmd->add_flag("--json", as_json);

    auto* norm_cmd = app.add_subcommand("norm-set", "orbits reachable by fundamental degenerations");
    norm_cmd->add_option("kind", kind)->required();
    norm_cmd->add_option("columns", cols)->required();
    norm_cmd->add_flag("--json", as_json);

    auto* params_cmd = app.add_subcommand("params", "parameters attached to Norm members");
    params_cmd->add_option("kind", kind)->required();
    params_cmd->add_option("columns", cols)->required();
    params_cmd->add_option("--member", member_cols, "restrict to one member (columns)");
    params_cmd->add_flag("--distinguished", distinguished_only);
    params_cmd->add_flag("--json", as_json);

    auto* factors_cmd = app.add_subcommand("factors", "composition factor data of B(closure)");
    factors_cmd->add_option("kind", kind)->required();
    factors_cmd->add_option("columns", cols)->required();
    factors_cmd->add_flag("--json", as_json);

    std::string orbit_arg;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "K-type multiplicity tables");
    spectrum_cmd->add_option("--orbit", orbit_arg, "<kind>:<columns>")->required();
    spectrum_cmd->add_option("--which", which, "orbit|closure|distinguished-sum|char-formula");
    spectrum_cmd->add_option("--ktypes", ktypes, "diminutive|height=N");
    spectrum_cmd->add_option("--format", format, "table|json");

    auto* verify_cmd = app.add_subcommand("verify", "replay one of the global identities");
    verify_cmd->add_option("what", verify_what, "prop7.3|cor7.4|cor8.5|charformula|oracle|invariants")->required();
    verify_cmd->add_option("--max-size", max_size, "largest orbit size (default 16)");
    verify_cmd->add_option("--samples", samples, "randomized oracle samples at rank 5");

    auto* corpus_cmd = app.add_subcommand("corpus", "replay the example corpus");
    corpus_cmd->add_option("file", corpus_path, "corpus file (default data/corpus.txt)");

    auto* ktype_cmd = app.add_subcommand("ktype", "weight-engine passthrough");
    int kt_rank = 1;
    std::string kt_weight, kt_shape, kt_targets, kt_op = "dim";
    ktype_cmd->add_option("op", kt_op, "dim|branch")->required();
    ktype_cmd->add_option("--rank", kt_rank)->required();
    ktype_cmd->add_option("--weight", kt_weight)->required();
    ktype_cmd->add_option("--shape", kt_shape, "block sizes, e.g. 2,1");
    ktype_cmd->add_option("--targets", kt_targets, "per-block weights, e.g. 1,0|1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (validate_cmd->parsed()) {
            Orbit o = orbit_from_args(kind, cols);
            if (as_json) {
                std::cout << orbit_json(o).dump() << "\n";
            } else {
                std::cout << "valid " << kind_to_string(o.kind) << " orbit, columns "
                          << columns_to_string(o.columns) << ", size " << o.size() << "\n";
            }
        } else if (chains_cmd->parsed()) {
            Orbit o = symplectic_view(orbit_from_args(kind, cols));
            auto d = chain_decompose(o);
            if (as_json) {
                json a = json::array();
                for (const auto& c : d.chains) a.push_back(json{{"entries", c.entries},
                                                                {"parity", c.parity == Parity::Even ? 0 : 1},
                                                                {"generic", c.is_generic}});
                std::cout << a.dump() << "\n";
            } else {
                std::cout << chains_to_string(d) << "\n";
            }
        } else if (normal_cmd->parsed()) {
            Orbit o = symplectic_view(orbit_from_args(kind, cols));
            auto w = kp_normality(o);
            if (as_json) {
                json j{{"normal", !w.has_value()}};
                if (w) j["witness"] = json{{"chain", w->chain_index}, {"i", w->i}, {"j", w->j}};
                std::cout << j.dump() << "\n";
            } else if (!w) {
                std::cout << "normal\n";
            } else {
                auto chains = chain_decompose(o).chains;
                std::cout << "non-normal, witness chain "
                          << chain_to_string(chains[static_cast<std::size_t>(w->chain_index)].entries)
                          << " at i=" << w->i << ", j=" << w->j << "\n";
            }
        } else if (norm_cmd->parsed()) {
            Orbit o = symplectic_view(orbit_from_args(kind, cols));
            NormSet ns = norm_set(o);
            if (as_json) {
                json a = json::array();
                for (const auto& m : ns.members)
                    a.push_back(json{{"columns", m.orbit.columns},
                                     {"chains", chains_to_string(chain_decompose(m.orbit))},
                                     {"depth", m.depth}});
                std::cout << a.dump() << "\n";
            } else {
                int depth = -1;
                for (const auto& m : ns.members) {
                    if (m.depth != depth) {
                        depth = m.depth;
                        std::cout << "co-rank " << depth << ":\n";
                    }
                    std::cout << "  " << chains_to_string(chain_decompose(m.orbit)) << "  ("
                              << columns_to_string(m.orbit.columns) << ")\n";
                }
            }
        } else if (params_cmd->parsed()) {
            Orbit o = symplectic_view(orbit_from_args(kind, cols));
            NormSet ns = norm_set(o);
            json out = json::array();
            for (const auto& m : ns.members) {
                if (!member_cols.empty() && m.orbit.columns != parse_columns(member_cols)) continue;
                std::vector<AttachedParameter> list;
                if (distinguished_only) {
                    list.push_back(distinguished_parameter(ns, m));
                } else {
                    list = attach_parameters(ns, m);
                }
                if (as_json) {
                    json e{{"member", m.orbit.columns}, {"parameters", json::array()}};
                    for (const auto& p : list) e["parameters"].push_back(parameter_json(p));
                    out.push_back(e);
                } else {
                    std::cout << chains_to_string(chain_decompose(m.orbit)) << ":\n";
                    for (const auto& p : list)
                        std::cout << "  " << parameter_to_string(p) << "  =  "
                                  << parameter_factors_to_string(p) << "\n";
                }
            }
            if (as_json) std::cout << out.dump() << "\n";
            if (!member_cols.empty() && ns.find(parse_columns(member_cols)) == nullptr)
                fail(ErrorCode::NotMember, "orbit is not in the Norm set");
        } else if (factors_cmd->parsed()) {
            Orbit o = symplectic_view(orbit_from_args(kind, cols));
            auto fs = b_module_factors(o);
            if (as_json) {
                json a = json::array();
                for (const auto& f : fs)
                    a.push_back(json{{"wrappers", f.wrapper_columns}, {"parameter", parameter_json(f.param)}});
                std::cout << a.dump() << "\n";
            } else {
                for (const auto& f : fs) {
                    std::string s;
                    for (Column c : f.wrapper_columns)
                        s += "{" + std::to_string(c) + "," + std::to_string(c) + "}^+";
                    std::cout << s << parameter_factors_to_string(f.param) << "\n";
                }
            }
        } else if (spectrum_cmd->parsed()) {
            auto colon = orbit_arg.find(':');
            require(colon != std::string::npos, ErrorCode::BadRequest, "--orbit expects <kind>:<columns>");
            Orbit o = symplectic_view(orbit_from_args(orbit_arg.substr(0, colon), orbit_arg.substr(colon + 1)));
            int rank = static_cast<int>(o.size() / 2);
            SpectrumRequest req = SpectrumRequest::diminutive();
            if (ktypes.rfind("height=", 0) == 0)
                req = SpectrumRequest::up_to_height(std::stoll(ktypes.substr(7)));
            else
                require(ktypes == "diminutive", ErrorCode::BadRequest, "--ktypes diminutive|height=N");

            MultiplicityTable table;
            if (which == "orbit") {
                table = r_orbit_spectrum(o, req);
            } else if (which == "closure") {
                table = r_closure_spectrum(o, req);
            } else if (which == "distinguished-sum") {
                table = sum_distinguished_spectrum(o, req);
            } else if (which == "char-formula") {
                table = char_formula_table(char_formula_spec(o), req);
            } else {
                fail(ErrorCode::BadRequest, "--which orbit|closure|distinguished-sum|char-formula");
            }
            (void)rank;
            if (format == "json") {
                json a = json::array();
                for (const auto& [mu, m] : table.entries) a.push_back(json{{"ktype", mu}, {"mult", m}});
                std::cout << a.dump() << "\n";
            } else {
                for (const auto& [mu, m] : table.entries)
                    std::cout << columns_to_string(mu) << " -> " << m << "\n";
            }
        } else if (verify_cmd->parsed()) {
            return run_verify(verify_what, max_size, samples);
        } else if (corpus_cmd->parsed()) {
            VerifyResult r = verify_corpus(corpus_path);
            std::cout << (r.ok ? "ok" : "MISMATCH") << " corpus: " << r.cases << " checks";
            if (!r.ok) std::cout << " -- " << r.detail;
            std::cout << "\n";
            return r.ok ? 0 : 2;
        } else if (ktype_cmd->parsed()) {
            KType mu = parse_columns(kt_weight);
            if (kt_op == "dim") {
                std::cout << dimension(RsType::C, kt_rank, wt_from_ints(mu)) << "\n";
            } else if (kt_op == "branch") {
                require(!kt_shape.empty(), ErrorCode::BadRequest, "branch needs --shape");
                LeviShape shape;
                shape.block_sizes = parse_columns(kt_shape);
                if (kt_targets.empty()) {
                    for (auto s : shape.block_sizes)
                        shape.block_targets.push_back(GlWeight(static_cast<std::size_t>(s), 0));
                } else {
                    for (const auto& part : detail::split_list(kt_targets, '|'))
                        shape.block_targets.push_back(parse_columns(part));
                }
                std::cout << branch_to_levi(kt_rank, mu, shape) << "\n";
            } else {
                fail(ErrorCode::BadRequest, "ktype op must be dim or branch");
            }
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
