#include "crossplane/cli.hpp"

#include "crossplane/biplanarize.hpp"
#include "crossplane/bounds.hpp"
#include "crossplane/drawing.hpp"
#include "crossplane/errors.hpp"
#include "crossplane/rational.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <sstream>

namespace crossplane {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << text;
}

std::string instance_label(graph_family family,
                           const std::vector<std::int64_t>& params, int k) {
    std::string sub = "cr_" + std::to_string(k);
    if (family == graph_family::complete)
        return sub + "(K_" + std::to_string(params[0]) + ")";
    return sub + "(K_{" + std::to_string(params[0]) + "," +
           std::to_string(params[1]) + "})";
}

std::string args_summary(const certificate_step& s) {
    std::string out;
    for (const auto& [k, v] : s.args) {
        if (!out.empty()) out += ", ";
        out += k + "=" + v;
    }
    return out;
}

std::string bound_text(const bound_certificate& c) {
    std::string out = instance_label(c.family, c.params, c.k) +
                      " >= " + c.value.str() + "\n";
    if (c.steps.empty()) {
        out += "  (trivial zero bound)\n";
        return out;
    }
    out += "derivation:\n";
    int i = 1;
    for (const auto& s : c.steps)
        out += "  " + std::to_string(i++) + ". " + s.op + "(" +
               args_summary(s) + ") = " + s.result + "\n";
    return out;
}

std::string bound_csv(const bound_certificate& c) {
    std::string out = "op,args,result\n";
    for (const auto& s : c.steps) {
        std::string args;
        for (const auto& [k, v] : s.args) {
            if (!args.empty()) args += ' ';
            args += k + "=" + v;
        }
        out += s.op + "," + args + "," + s.result + "\n";
    }
    out += "value,," + c.value.str() + "\n";
    return out;
}

command_outcome run_bound(const std::string& family, int k, std::int64_t n,
                          std::int64_t p, std::int64_t q,
                          const std::string& format) {
    graph_family fam = family == "complete" ? graph_family::complete
                                            : graph_family::bipartite;
    std::vector<std::int64_t> params;
    if (fam == graph_family::complete) {
        if (n < 0) throw refusal_error("bound --family complete needs --n");
        params = {n};
    } else {
        if (p < 0 || q < 0)
            throw refusal_error("bound --family bipartite needs -p and -q");
        params = {p, q};
    }
    bound_certificate cert = best_lower_bound(fam, k, params);
    command_outcome res;
    if (format == "json")
        res.out = to_json(cert);
    else if (format == "csv")
        res.out = bound_csv(cert);
    else
        res.out = bound_text(cert);
    return res;
}

command_outcome run_chain(const std::string& family, int start, int end,
                          const std::string& mode, int k,
                          const std::string& seed_str,
                          const std::string& format) {
    graph_family fam = family == "complete" ? graph_family::complete
                                            : graph_family::bipartite;
    big_int seed;
    if (!seed_str.empty()) {
        seed = big_int(seed_str);
    } else if (fam == graph_family::bipartite) {
        seed = ceil_rat(big_rat(bipartite_cascade_bound(
            2 * static_cast<std::int64_t>(start),
            static_cast<std::int64_t>(start) * start, k)));
    } else {
        std::int64_t m = static_cast<std::int64_t>(start) * (start - 1) / 2;
        big_int ack = ceil_rat(ackerman_bound(start, m, k));
        big_int eul = euler_bound(start, m, false, k);
        seed = std::max(ack, eul);
    }
    std::vector<std::pair<int, big_int>> table;
    if (fam == graph_family::bipartite)
        table = bipartite_chain_table(start, end, seed,
                                      mode == "nested" ? chain_mode::nested
                                                       : chain_mode::per_step);
    else
        table = complete_chain_table(start, end, seed);

    command_outcome res;
    if (format == "json") {
        json j;
        j["family"] = family;
        j["k"] = k;
        if (fam == graph_family::bipartite) j["mode"] = mode;
        j["seed"] = seed.str();
        json rows = json::array();
        for (const auto& [t, v] : table) rows.push_back({t, v.str()});
        j["rows"] = rows;
        res.out = j.dump(2) + "\n";
    } else if (format == "csv") {
        res.out = "n,value\n";
        for (const auto& [t, v] : table)
            res.out += std::to_string(t) + "," + v.str() + "\n";
    } else {
        res.out = "chain " + family + " (k=" + std::to_string(k) + ", seed " +
                  seed.str() +
                  (fam == graph_family::bipartite ? ", mode " + mode : "") +
                  ")\n";
        for (const auto& [t, v] : table) {
            std::string label =
                fam == graph_family::bipartite
                    ? "K_{" + std::to_string(t) + "," + std::to_string(t) + "}"
                    : "K_" + std::to_string(t);
            res.out += "  " + label + "  " + v.str() + "\n";
        }
    }
    return res;
}

command_outcome run_table(const std::string& which, const std::string& format) {
    command_outcome res;
    if (which == "approx-factors") {
        auto rows = approx_factor_table();
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"quantity", r.quantity},
                               {"prior", format_factor(r.prior)},
                               {"new", format_factor(r.current)}});
            res.out = arr.dump(2) + "\n";
        } else if (format == "csv") {
            res.out = "quantity,prior,new\n";
            for (const auto& r : rows)
                res.out += r.quantity + "," + format_factor(r.prior) + "," +
                           format_factor(r.current) + "\n";
        } else {
            res.out = "quantity        prior   new\n";
            for (const auto& r : rows) {
                std::string q = r.quantity;
                q.resize(16, ' ');
                std::string prior = format_factor(r.prior);
                prior.resize(8, ' ');
                res.out += q + prior + format_factor(r.current) + "\n";
            }
        }
        return res;
    }
    if (which == "cstar") {
        big_rat c = cstar_lower();
        res.out = "c* >= 64/694 = " + rat_to_string(c) +
                  " (~0.0922); prior lower bound 0.067; upper bound 3/8 = 0.375\n";
        return res;
    }
    throw refusal_error("unknown table \"" + which +
                        "\" (expected approx-factors or cstar)");
}

} // namespace

command_outcome dispatch(const std::vector<std::string>& args) {
    command_outcome res;
    CLI::App app{"biplanar & k-planar crossing number toolkit", "crossplane"};
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "best certified lower bound");
    std::string b_family;
    int b_k = 2;
    std::int64_t b_n = -1, b_p = -1, b_q = -1;
    std::string b_format = "text";
    bound->add_option("--family", b_family, "complete or bipartite")
        ->required()
        ->check(CLI::IsMember({"complete", "bipartite"}));
    bound->add_option("--k", b_k, "number of planes (default 2)");
    bound->add_option("--n", b_n, "complete: vertex count");
    bound->add_option("-p", b_p, "bipartite: first side");
    bound->add_option("-q", b_q, "bipartite: second side");
    bound->add_option("--format", b_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // chain
    auto* chain = app.add_subcommand("chain", "iterated counting recurrence");
    std::string c_family, c_mode = "per-step", c_seed, c_format = "text";
    int c_start = 0, c_end = 0, c_k = 2;
    chain->add_option("--family", c_family, "complete or bipartite")
        ->required()
        ->check(CLI::IsMember({"complete", "bipartite"}));
    chain->add_option("--start", c_start, "seed instance size")->required();
    chain->add_option("--end", c_end, "target instance size")->required();
    chain->add_option("--mode", c_mode, "per-step or nested (bipartite)")
        ->check(CLI::IsMember({"per-step", "nested"}));
    chain->add_option("--k", c_k, "number of planes (default 2)");
    chain->add_option("--seed", c_seed,
                      "override the seed value (defaults to the density bound)");
    chain->add_option("--format", c_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // draw
    auto* draw = app.add_subcommand("draw", "drawing constructions");
    draw->require_subcommand(1);
    auto* zar = draw->add_subcommand("zarankiewicz", "axis drawing of K_{p,q}");
    std::int64_t z_p = 0, z_q = 0;
    std::string z_out;
    zar->add_option("-p", z_p, "first side")->required();
    zar->add_option("-q", z_q, "second side")->required();
    zar->add_option("--out", z_out, "output file (stdout when omitted)");
    auto* cyl = draw->add_subcommand("cylindrical", "two-circle drawing of K_n");
    std::int64_t y_n = 0;
    std::string y_out;
    cyl->add_option("-n,--n", y_n, "vertex count (3..12)")->required();
    cyl->add_option("--out", y_out, "output file (stdout when omitted)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "biplanarize a drawing");
    std::string d_file;
    dec->add_option("--drawing", d_file, "drawing JSON file")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "replay a bound certificate");
    std::string v_file;
    ver->add_option("--certificate", v_file, "certificate JSON file")->required();

    // table
    auto* tab = app.add_subcommand("table", "published summary tables");
    std::string t_which, t_format = "text";
    tab->add_option("name", t_which, "approx-factors or cstar")->required();
    tab->add_option("--format", t_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<const char*> argv;
    argv.push_back("crossplane");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::CallForHelp& e) {
        res.out = app.help();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n" + app.help();
        res.exit_code = 2;
        return res;
    }

    try {
        if (bound->parsed()) return run_bound(b_family, b_k, b_n, b_p, b_q, b_format);
        if (chain->parsed())
            return run_chain(c_family, c_start, c_end, c_mode, c_k, c_seed,
                             c_format);
        if (draw->parsed()) {
            if (zar->parsed()) {
                auto d = zarankiewicz_drawing(static_cast<int>(z_p),
                                              static_cast<int>(z_q));
                auto [count, cd] = count_crossings(d);
                std::string payload = to_json(d);
                if (z_out.empty()) {
                    res.out = payload;
                } else {
                    write_file(z_out, payload);
                    res.out = "crossings " + std::to_string(count) + "\n";
                }
                res.err = "Z(" + std::to_string(z_p) + "," + std::to_string(z_q) +
                          ") = " + zarankiewicz_number(z_p, z_q).str() + "\n";
                return res;
            }
            auto cd = cylindrical_drawing(static_cast<int>(y_n));
            std::string payload = to_json(cd);
            if (y_out.empty()) {
                res.out = payload;
            } else {
                write_file(y_out, payload);
                res.out = "crossings " + std::to_string(cd.crossings.size()) + "\n";
            }
            res.err = "Z(" + std::to_string(y_n) +
                      ") = " + guy_number(y_n).str() + "\n";
            return res;
        }
        if (dec->parsed()) {
            auto cd = drawing_from_json(read_file(d_file));
            auto out = biplanarize_low_crossing(cd);
            if (!out.ok()) {
                res.err = std::string(to_string(out.status)) + ": " +
                          out.diagnostic + "\n";
                res.exit_code = 1;
                return res;
            }
            res.out = to_json(*out.parts);
            return res;
        }
        if (ver->parsed()) {
            auto cert = certificate_from_json(read_file(v_file));
            auto verdict = verify_certificate(cert);
            if (verdict.ok) {
                res.out = "valid: " +
                          instance_label(cert.family, cert.params, cert.k) +
                          " >= " + cert.value.str() + "\n";
                return res;
            }
            res.err = "invalid certificate: " + verdict.diagnostic + "\n";
            res.exit_code = 1;
            return res;
        }
        if (tab->parsed()) return run_table(t_which, t_format);
    } catch (const json::exception& e) {
        res.err = std::string("bad input file: ") + e.what() + "\n";
        res.exit_code = 1;
        return res;
    } catch (const error& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 1;
        return res;
    }
    res.err = "no subcommand\n";
    res.exit_code = 2;
    return res;
}

} // namespace crossplane
