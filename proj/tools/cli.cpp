#include "cli.hpp"

#include "json_io.hpp"

#include "hankelwalk/hankelwalk.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace hankelwalk::cli {

namespace {

using io::Json;

struct Flags {
    std::string input;
    std::string output;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t cap = 0;
    std::string a0 = "1/1";
    std::string format = "json";
    // Which optional flags were actually given.
    bool has_k = false;
    bool has_n = false;
    bool has_cap = false;
    bool has_a0 = false;
};

struct Outcome {
    Json body = Json::object();
    std::string verdict = "verified";
    int exit_code = kSuccess;
};

Caps caps_of(const Flags& f) { return f.has_cap ? Caps::uniform(f.cap) : Caps{}; }

std::size_t require_k(const Flags& f) {
    if (!f.has_k) throw Error(ErrorKind::InvalidArgument, "--k is required");
    return f.k;
}

std::size_t require_n(const Flags& f, const char* name) {
    if (!f.has_n) throw Error(ErrorKind::InvalidArgument, std::string(name) + " is required");
    return f.n;
}

WalkGraph graph_input(const Json& doc, const Flags& f) {
    if (io::looks_like_graph(doc)) return io::graph_from_json(doc);
    return ProductGraph{require_k(f), io::weights_from_json(doc)};
}

Outcome transform(const Json& doc, const Flags& f) {
    const auto a = io::sequence_from_json(doc);
    const auto out = hankel_transform(a, require_k(f));
    Outcome o;
    o.body["input_length"] = a.size();
    o.body["output_length"] = out.size();
    o.body.update(io::sequence_to_json(out));
    return o;
}

Outcome check_sm(const Json& doc, const Flags&) {
    const auto a = io::sequence_from_json(doc);
    const auto r = sm_check(a);
    Outcome o;
    o.body["depth_unshifted"] = r.depth_unshifted;
    o.body["depth_shifted"] = r.depth_shifted;
    o.body["depth"] = r.depth();
    if (r.consistent()) {
        o.verdict = "consistent-at-depth";
        return o;
    }
    const auto& ref = *r.refutation;
    Json j{{"reason", ref.reason}, {"shift", ref.shift}};
    if (ref.matrix) {
        j["matrix"] = io::matrix_to_json(*ref.matrix);
        j["witness"] = io::rationals(ref.witness);
        j["quadratic_form"] = to_string(quadratic_form(*ref.matrix, ref.witness));
    }
    if (ref.offending_index) j["offending_index"] = *ref.offending_index;
    o.body["refutation"] = std::move(j);
    o.verdict = "refuted";
    o.exit_code = kRefuted;
    return o;
}

Outcome extract_weights(const Json& doc, const Flags&) {
    const auto a = io::sequence_from_json(doc);
    const auto r = weights_from_moments(a);
    Outcome o;
    o.body["a0"] = to_string(a[0]);
    if (!r.consistent()) {
        o.body["inconsistent_index"] = *r.inconsistent_index;
        o.verdict = "refuted";
        o.exit_code = kRefuted;
        return o;
    }
    o.body["levels"] = r.weights->lambda.size();
    o.body.update(io::weights_to_json(*r.weights));
    // Negative levels are reported as-is; check-sm decides moment consistency.
    o.body["nonnegative"] = std::all_of(r.weights->lambda.begin(), r.weights->lambda.end(),
                                        [](const Rational& x) { return sgn(x) >= 0; });
    return o;
}

Outcome enumerate_moments(const Json& doc, const Flags& f) {
    const auto w = io::weights_from_json(doc);
    const std::size_t N = f.has_n ? f.n : w.lambda.size();
    const auto a = moments_from_weights(w, parse_rational(f.a0), N, caps_of(f));
    Outcome o;
    o.body.update(io::sequence_to_json(a));
    return o;
}

Outcome lgv_check(const Json& doc, const Flags& f) {
    const auto w = io::weights_from_json(doc);
    const std::size_t k = require_k(f);
    const std::size_t N = require_n(f, "--n");
    const auto caps = caps_of(f);
    const auto moments = moments_from_weights(w, 1, N + 2 * k - 2, caps);
    const auto transformed = hankel_transform(moments, k);
    const auto padding = padding_weight(w, k);

    Outcome o;
    o.body["k"] = k;
    o.body["padding_weight"] = to_string(padding);
    Json table = Json::array();
    bool all = true;
    for (std::size_t n = 0; n <= N; ++n) {
        const auto lgv = lgv_sum(1, w, k, n, caps);
        const auto b = noncrossing_sum(w, k, n, caps);
        const bool match = lgv == transformed[n] && lgv == padding * b;
        all = all && match;
        table.push_back({{"n", n},
                         {"lgv_sum", to_string(lgv)},
                         {"hankel_determinant", to_string(transformed[n])},
                         {"noncrossing_sum", to_string(b)},
                         {"match", match}});
    }
    o.body["table"] = std::move(table);
    if (!all) {
        o.verdict = "refuted";
        o.exit_code = kRefuted;
    }
    return o;
}

Outcome walk_sum(const Json& doc, const Flags& f) {
    const auto g = graph_input(doc, f);
    const auto sums = closed_walk_sums(g, require_n(f, "--n"), caps_of(f));
    Outcome o;
    o.body["graph"] = std::holds_alternative<ExplicitGraph>(g) ? "explicit" : "product";
    if (const auto* p = std::get_if<ProductGraph>(&g)) o.body["k"] = p->k;
    o.body.update(io::sequence_to_json(sums));
    return o;
}

Outcome lanczos(const Json& doc, const Flags& f) {
    const auto g = graph_input(doc, f);
    const std::size_t depth = require_n(f, "--depth");
    const auto caps = caps_of(f);
    const auto t = lanczos_path_weights(g, depth, caps);
    const auto source = closed_walk_sums(g, depth, caps);
    const auto path = closed_walk_sums(WalkGraph(ProductGraph{1, t.as_level_weights()}), depth, caps);

    Outcome o;
    o.body["graph"] = std::holds_alternative<ExplicitGraph>(g) ? "explicit" : "product";
    o.body["beta_sq"] = io::rationals(t.beta_sq);
    o.body["terminated"] = t.terminated;
    Json table = Json::array();
    bool all = true;
    for (std::size_t n = 0; n <= depth; ++n) {
        const bool match = source[n] == path[n];
        all = all && match;
        table.push_back({{"n", n}, {"source", to_string(source[n])}, {"path", to_string(path[n])}, {"match", match}});
    }
    o.body["table"] = std::move(table);
    if (!all) {
        o.verdict = "refuted";
        o.exit_code = kRefuted;
    }
    return o;
}

Outcome verify(const Json& doc, const Flags& f) {
    const auto a = io::sequence_from_json(doc);
    VerifyOptions opts;
    opts.caps = caps_of(f);
    if (f.has_n) opts.max_n = f.n;
    const auto r = verify_theorem(a, require_k(f), opts);

    Outcome o;
    o.body["k"] = r.k;
    o.body["weights"] = io::weights_to_json(r.weights);
    o.body["transformed"] = io::rationals(r.transformed.terms());
    o.body["walk_sums"] = io::rationals(r.walk_sums.terms());
    Json table = Json::array();
    for (const auto& c : r.comparisons) {
        table.push_back({{"n", c.n},
                         {"transformed", to_string(c.transformed)},
                         {"a0_prime_times_b", to_string(c.predicted)},
                         {"match", c.match}});
    }
    o.body["table"] = std::move(table);
    o.body["witness"] = r.witness ? io::weights_to_json(*r.witness) : Json(nullptr);
    o.body["lanczos"] = r.lanczos ? Json{{"beta_sq", io::rationals(r.lanczos->beta_sq)},
                                         {"terminated", r.lanczos->terminated}}
                                  : Json(nullptr);
    o.body["input_weights_nonnegative"] = r.input_weights_nonnegative;
    o.body["witness_nonnegative"] = r.witness_nonnegative;
    o.body["lanczos_agrees"] = r.lanczos_agrees;
    if (!r.verified()) {
        o.verdict = "refuted";
        o.exit_code = kRefuted;
    }
    return o;
}

using Handler = std::function<Outcome(const Json&, const Flags&)>;

struct Command {
    const char* name;
    const char* help;
    Handler handler;
    bool takes_k;
    bool takes_n;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> table{
        {"transform", "Apply L_k to a sequence file", transform, true, false},
        {"check-sm", "Exact PSD check of both Hankel truncations", check_sm, false, false},
        {"extract-weights", "Recover level weights from a sequence file", extract_weights, false, false},
        {"enumerate-moments", "Generate moments from a weights file", enumerate_moments, false, true},
        {"lgv-check", "Compare non-intersecting path sums with Hankel determinants", lgv_check, true, true},
        {"walk-sum", "Closed-walk totals on an explicit graph or weighted product graph", walk_sum, true, true},
        {"lanczos", "Lanczos path weights of an explicit graph or weighted product graph", lanczos, true, true},
        {"verify", "Constructive check that L_k preserves path-enumerability", verify, true, true},
    };
    return table;
}

Json flag_echo(const Flags& f) {
    Json j{{"input", f.input}};
    if (f.has_k) j["k"] = f.k;
    if (f.has_n) j["n"] = f.n;
    if (f.has_cap) j["cap"] = f.cap;
    if (f.has_a0) j["a0"] = f.a0;
    j["format"] = f.format;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hankel-transform, Dyck-path and closed-walk toolkit", "hankelwalk"};
    app.require_subcommand(1);
    Flags flags;
    std::map<const CLI::App*, const Command*> by_app;
    std::map<std::string, CLI::Option*> k_opts, n_opts, cap_opts, a0_opts;

    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        by_app[sub] = &cmd;
        sub->add_option("--input", flags.input, "Input JSON file")->required();
        sub->add_option("--output", flags.output, "Write the report here instead of standard output");
        sub->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"json"}));
        cap_opts[cmd.name] = sub->add_option("--cap", flags.cap, "Override every enumeration cap");
        if (cmd.takes_k) k_opts[cmd.name] = sub->add_option("--k", flags.k, "Hankel order / product dimension");
        if (cmd.takes_n) n_opts[cmd.name] = sub->add_option("--n,--depth", flags.n, "Largest n / Lanczos depth");
        if (std::string(cmd.name) == "enumerate-moments")
            a0_opts[cmd.name] = sub->add_option("--a0", flags.a0, "Leading moment as \"p/q\"");
    }

    std::vector<const char*> argv{"hankelwalk"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "hankelwalk: usage error: " << e.what() << "\n";
        return kUsageError;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const Command& cmd = *by_app.at(chosen);
    auto given = [](const std::map<std::string, CLI::Option*>& m, const char* name) {
        auto it = m.find(name);
        return it != m.end() && it->second->count() > 0;
    };
    flags.has_k = given(k_opts, cmd.name);
    flags.has_n = given(n_opts, cmd.name);
    flags.has_cap = given(cap_opts, cmd.name);
    flags.has_a0 = given(a0_opts, cmd.name);

    Json report{{"command", cmd.name}, {"flags", flag_echo(flags)}};
    int code = kSuccess;
    try {
        const Json doc = io::load_json(flags.input);
        report["input_digest"] = io::digest(doc);
        Outcome o = cmd.handler(doc, flags);
        report.update(o.body);
        report["verdict"] = o.verdict;
        code = o.exit_code;
    } catch (const Error& e) {
        err << "hankelwalk: error: " << e.what() << "\n";
        report["error"] = e.what();
        report["verdict"] = "error";
        code = kUsageError;
    }
    report["exit_code"] = code;

    const std::string text = report.dump(2) + "\n";
    if (flags.output.empty()) {
        out << text;
    } else {
        std::ofstream file(flags.output, std::ios::binary);
        if (!file) {
            err << "hankelwalk: error: cannot write " << flags.output << "\n";
            return kUsageError;
        }
        file << text;
    }
    return code;
}

}  // namespace hankelwalk::cli
