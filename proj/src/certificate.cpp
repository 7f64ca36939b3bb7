#include "crossplane/bounds.hpp"
#include "crossplane/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <optional>

namespace crossplane {

using nlohmann::json;

std::string to_json(const bound_certificate& c) {
    json j;
    j["family"] = to_string(c.family);
    j["params"] = c.params;
    j["k"] = c.k;
    j["value"] = c.value.str();
    json steps = json::array();
    for (const auto& s : c.steps) {
        json js;
        js["op"] = s.op;
        json args = json::object();
        for (const auto& [key, val] : s.args) args[key] = val;
        js["args"] = args;
        js["result"] = s.result;
        steps.push_back(js);
    }
    j["steps"] = steps;
    return j.dump(2) + "\n";
}

bound_certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    bound_certificate c;
    std::string fam = j.at("family").get<std::string>();
    if (fam == "complete")
        c.family = graph_family::complete;
    else if (fam == "bipartite")
        c.family = graph_family::bipartite;
    else
        throw error("certificate: unknown family \"" + fam + "\"");
    c.params = j.at("params").get<std::vector<std::int64_t>>();
    c.k = j.at("k").get<int>();
    c.value = big_int(j.at("value").get<std::string>());
    for (const auto& js : j.at("steps")) {
        certificate_step s;
        s.op = js.at("op").get<std::string>();
        for (const auto& [key, val] : js.at("args").items())
            s.args.emplace_back(key, val.get<std::string>());
        std::sort(s.args.begin(), s.args.end());
        s.result = js.at("result").get<std::string>();
        c.steps.push_back(std::move(s));
    }
    return c;
}

namespace {

// Replay state: the running value, how many planes the current bound
// covers, the instance the value refers to, and whether the previous step
// was a liftable density bound.
struct replay_state {
    big_rat value;
    bool value_known = false;
    int planes = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> instance; // (n, m)
    enum class density { none, euler_simple, euler_bip, cascade, ackerman };
    density liftable = density::none;
    std::int64_t dn = 0, dm = 0;
};

struct replay_error {
    std::string message;
};

std::int64_t arg_int(const certificate_step& s, const std::string& key) {
    for (const auto& [k, v] : s.args)
        if (k == key) {
            try {
                std::size_t pos = 0;
                std::int64_t out = std::stoll(v, &pos);
                if (pos != v.size()) throw std::invalid_argument(v);
                return out;
            } catch (const std::exception&) {
                throw replay_error{"argument \"" + key + "\" is not an integer"};
            }
        }
    throw replay_error{"missing argument \"" + key + "\""};
}

std::string arg_str(const certificate_step& s, const std::string& key) {
    for (const auto& [k, v] : s.args)
        if (k == key) return v;
    throw replay_error{"missing argument \"" + key + "\""};
}

big_rat density_value(replay_state::density kind, std::int64_t n,
                      std::int64_t m, int k) {
    switch (kind) {
    case replay_state::density::euler_simple:
        return big_rat(euler_bound(n, m, false, k));
    case replay_state::density::euler_bip:
        return big_rat(euler_bound(n, m, true, k));
    case replay_state::density::cascade:
        return big_rat(bipartite_cascade_bound(n, m, k));
    case replay_state::density::ackerman:
        return ackerman_bound(n, m, k);
    default:
        throw replay_error{"internal: no density to recompute"};
    }
}

void require_integer_value(const replay_state& st) {
    if (!st.value_known) throw replay_error{"no value to operate on"};
    if (!is_integer(st.value))
        throw replay_error{"value is fractional; a ceil step is required"};
}

void apply_step(const bound_certificate& cert, const certificate_step& s,
                replay_state& st) {
    auto set_density = [&](replay_state::density kind, std::int64_t n,
                           std::int64_t m) {
        st.value = density_value(kind, n, m, 1);
        st.value_known = true;
        st.planes = 1;
        st.instance = {{n, m}};
        st.liftable = kind;
        st.dn = n;
        st.dm = m;
    };

    if (s.op == "euler_bound") {
        std::int64_t n = arg_int(s, "n"), m = arg_int(s, "m");
        std::string bip = arg_str(s, "bipartite");
        if (bip != "true" && bip != "false")
            throw replay_error{"\"bipartite\" must be true or false"};
        bool bipartite = bip == "true";
        if (bipartite && cert.family != graph_family::bipartite)
            throw replay_error{"bipartite density bound on a non-bipartite family"};
        set_density(bipartite ? replay_state::density::euler_bip
                              : replay_state::density::euler_simple,
                    n, m);
        return;
    }
    if (s.op == "cascade_bound") {
        if (cert.family != graph_family::bipartite)
            throw replay_error{"cascade bound applies to bipartite hosts only"};
        set_density(replay_state::density::cascade, arg_int(s, "n"),
                    arg_int(s, "m"));
        return;
    }
    if (s.op == "ackerman_bound") {
        set_density(replay_state::density::ackerman, arg_int(s, "n"),
                    arg_int(s, "m"));
        return;
    }
    if (s.op == "hereditary_lift") {
        std::int64_t k = arg_int(s, "k");
        if (k < 1) throw replay_error{"lift needs k >= 1"};
        if (st.liftable == replay_state::density::none)
            throw replay_error{
                "lift must immediately follow a single-plane density bound"};
        if (st.planes != 1) throw replay_error{"bound is already lifted"};
        st.value = density_value(st.liftable, st.dn, st.dm, static_cast<int>(k));
        st.planes = static_cast<int>(k);
        st.liftable = replay_state::density::none;
        return;
    }
    st.liftable = replay_state::density::none; // anything else breaks liftability
    if (s.op == "ceil") {
        if (!st.value_known) throw replay_error{"no value to ceil"};
        st.value = big_rat(ceil_rat(st.value));
        return;
    }
    if (s.op == "bipartite_chain") {
        if (cert.family != graph_family::bipartite)
            throw replay_error{"bipartite chain on a non-bipartite family"};
        require_integer_value(st);
        std::int64_t start = arg_int(s, "start"), end = arg_int(s, "end");
        std::string mode = arg_str(s, "mode");
        if (mode != "per-step" && mode != "nested")
            throw replay_error{"mode must be per-step or nested"};
        if (start < 4 || end < start)
            throw replay_error{"chain needs 4 <= start <= end"};
        if (!st.instance ||
            *st.instance != std::pair{2 * start, start * start})
            throw replay_error{"chain start does not match the current instance"};
        st.value = big_rat(bipartite_chain(
            static_cast<int>(start), static_cast<int>(end), numerator(st.value),
            mode == "nested" ? chain_mode::nested : chain_mode::per_step));
        st.instance = {{2 * end, end * end}};
        return;
    }
    if (s.op == "complete_chain") {
        if (cert.family != graph_family::complete)
            throw replay_error{"complete chain on a non-complete family"};
        require_integer_value(st);
        std::int64_t start = arg_int(s, "start"), end = arg_int(s, "end");
        if (start < 5 || end < start)
            throw replay_error{"chain needs 5 <= start <= end"};
        if (!st.instance ||
            *st.instance != std::pair{start, start * (start - 1) / 2})
            throw replay_error{"chain start does not match the current instance"};
        st.value = big_rat(complete_chain(static_cast<int>(start),
                                          static_cast<int>(end),
                                          numerator(st.value)));
        st.instance = {{end, end * (end - 1) / 2}};
        return;
    }
    if (s.op == "scale_bipartite") {
        if (cert.family != graph_family::bipartite)
            throw replay_error{"bipartite scaling on a non-bipartite family"};
        require_integer_value(st);
        std::int64_t r = arg_int(s, "r"), p = arg_int(s, "p"), q = arg_int(s, "q");
        if (r < 2 || p < r || q < r)
            throw replay_error{"scaling needs p, q >= r >= 2"};
        if (!st.instance || *st.instance != std::pair{2 * r, r * r})
            throw replay_error{"scaling base does not match the current instance"};
        st.value = big_rat(
            scale_bipartite(static_cast<int>(r), numerator(st.value), p, q));
        st.instance = {{p + q, p * q}};
        return;
    }
    if (s.op == "scale_complete") {
        if (cert.family != graph_family::complete)
            throw replay_error{"complete scaling on a non-complete family"};
        require_integer_value(st);
        std::int64_t r = arg_int(s, "r"), n = arg_int(s, "n");
        if (r < 5 || n < r) throw replay_error{"scaling needs n >= r >= 5"};
        if (!st.instance || *st.instance != std::pair{r, r * (r - 1) / 2})
            throw replay_error{"scaling base does not match the current instance"};
        st.value = big_rat(
            scale_complete(static_cast<int>(r), numerator(st.value), n));
        st.instance = {{n, n * (n - 1) / 2}};
        return;
    }
    throw replay_error{"unknown op \"" + s.op + "\""};
}

} // namespace

verify_outcome verify_certificate(const bound_certificate& cert) {
    auto fail = [](int idx, std::string msg) {
        return verify_outcome{false, idx, std::move(msg)};
    };
    if (cert.k < 1) return fail(-1, "k must be >= 1");
    if (cert.family == graph_family::complete && cert.params.size() != 1)
        return fail(-1, "complete family needs params [n]");
    if (cert.family == graph_family::bipartite && cert.params.size() != 2)
        return fail(-1, "bipartite family needs params [p, q]");
    for (std::int64_t p : cert.params)
        if (p < 0) return fail(-1, "negative family parameter");
    if (cert.value < 0) return fail(-1, "negative value");

    if (cert.steps.empty()) {
        if (cert.value != 0)
            return fail(-1, "a certificate without steps must state value 0");
        return verify_outcome{true, -1, "trivial zero bound"};
    }

    replay_state st;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        try {
            apply_step(cert, s, st);
        } catch (const replay_error& e) {
            return fail(static_cast<int>(i), "step " + std::to_string(i) +
                                                 " (" + s.op + "): " + e.message);
        } catch (const error& e) {
            return fail(static_cast<int>(i), "step " + std::to_string(i) +
                                                 " (" + s.op + "): " + e.what());
        }
        big_rat recorded;
        try {
            recorded = rat_from_string(s.result);
        } catch (const error&) {
            return fail(static_cast<int>(i),
                        "step " + std::to_string(i) + ": malformed result");
        }
        if (recorded != st.value)
            return fail(static_cast<int>(i),
                        "step " + std::to_string(i) + " (" + s.op +
                            "): recorded result " + s.result +
                            " does not replay (got " + rat_to_string(st.value) +
                            ")");
    }

    if (!is_integer(st.value))
        return fail(-1, "final value is fractional; missing ceil");
    if (numerator(st.value) != cert.value)
        return fail(-1, "stated value " + cert.value.str() +
                            " differs from replayed " + rat_to_string(st.value));
    if (st.planes != cert.k)
        return fail(-1, "derivation covers " + std::to_string(st.planes) +
                            " plane(s) but the certificate claims k = " +
                            std::to_string(cert.k));
    std::pair<std::int64_t, std::int64_t> target =
        cert.family == graph_family::complete
            ? std::pair{cert.params[0], cert.params[0] * (cert.params[0] - 1) / 2}
            : std::pair{cert.params[0] + cert.params[1],
                        cert.params[0] * cert.params[1]};
    if (!st.instance || *st.instance != target)
        return fail(-1, "derivation ends at the wrong instance");
    return verify_outcome{true, -1, ""};
}

} // namespace crossplane
