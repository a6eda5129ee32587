#include "ndelta/cli.hpp"

#include <charconv>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ndelta/classify.hpp"
#include "ndelta/error.hpp"
#include "ndelta/io.hpp"
#include "ndelta/realize.hpp"
#include "ndelta/verify.hpp"

namespace ndelta::cli {

namespace {

using io::Json;

constexpr u64 kJsonLinesThreshold = 100'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 parse_natural(const std::string& text, const char* what) {
    u64 v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec == std::errc::result_out_of_range) throw OverflowError(std::string(what) + " exceeds 64 bits: " + text);
    if (ec != std::errc() || ptr != end) throw UsageError(std::string(what) + " is not a natural number: " + text);
    require_natural(v);
    return v;
}

u64 parse_at_least_two(const std::string& text, const char* what) {
    const u64 v = parse_natural(text, what);
    if (v < 2) throw UsageError(std::string(what) + " must be at least 2");
    return v;
}

Json triples_json(const std::vector<DeltaTriple>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(io::triple_json(t));
    return a;
}

// A command fills `results` and may stream extra text lines directly.
struct Outcome {
    Json results;
    std::string text;  // non-JSON output (DOT, CSV, JSON Lines)
    int code = kExitOk;
};

Outcome cmd_check(u64 n) {
    const auto ts = delta_triples(n);
    Json j;
    j["n"] = n;
    j["member"] = !ts.empty();
    j["triples"] = triples_json(ts);
    j["primitive"] = !ts.empty() && is_primitive(n);
    return {j, {}, kExitOk};
}

Outcome cmd_triples(u64 n) {
    Json j;
    j["n"] = n;
    j["triples"] = triples_json(delta_triples(n));
    return {j, {}, kExitOk};
}

Outcome cmd_primitive(u64 n) {
    Json j;
    j["n"] = n;
    const bool member = has_delta(n);
    j["member"] = member;
    Json decs = Json::array();
    if (member)
        for (const auto& d : primitive_decompositions(n)) decs.push_back(io::decomposition_json(d));
    j["primitive"] = member && decs.size() == 1 && decs[0]["alpha"] == 1;
    j["decompositions"] = decs;
    return {j, {}, kExitOk};
}

Outcome cmd_classify(u64 n) { return {io::verdict_json(classify(n)), {}, kExitOk}; }

enum class Filter { None, Primitive, Squares, Odd };

const char* filter_name(Filter f) {
    switch (f) {
        case Filter::Primitive: return "primitive";
        case Filter::Squares: return "squares";
        case Filter::Odd: return "odd";
        case Filter::None: break;
    }
    return "none";
}

Outcome cmd_enumerate(u64 max, Filter filter, const std::string& format) {
    const auto in_range = [&](u64 n) {
        if (filter == Filter::Odd) return n % 2 == 1;
        if (filter == Filter::Squares) return is_perfect_square(n);
        return true;
    };
    Outcome o;
    std::ostringstream text;
    Json members = Json::array();
    const bool csv = format == "csv";
    const bool lines = !csv && max > kJsonLinesThreshold;
    if (csv) text << "n,member,primitive,tau,squarefreePart\n";
    for (u64 n = 2; n <= max; ++n) {
        if (!in_range(n)) continue;
        const Factorization f = factorize(n);
        const bool member = has_delta(f);
        if (!csv && !member) continue;
        const bool primitive = member && is_primitive(n);
        if (filter == Filter::Primitive && !primitive) continue;
        if (csv) {
            text << n << ',' << (member ? "true" : "false") << ',' << (primitive ? "true" : "false") << ',' << tau(f)
                 << ',' << squarefree_part(f) << '\n';
        } else if (lines) {
            Json row;
            row["n"] = n;
            row["primitive"] = primitive;
            row["tau"] = tau(f);
            row["squarefreePart"] = squarefree_part(f);
            text << row.dump() << '\n';
        } else {
            members.push_back(n);
        }
    }
    if (csv || lines) {
        o.text = text.str();
        o.results = nullptr;
        return o;
    }
    o.results["max"] = max;
    o.results["filter"] = filter_name(filter);
    o.results["count"] = members.size();
    o.results["members"] = members;
    return o;
}

Outcome cmd_family(i64 a, i64 b, i64 c, std::optional<u64> count, std::optional<u64> scan) {
    const PolyFamily f = make_family(a, b, c);
    Json j = io::family_json(f);
    if (scan) {
        Json hits = Json::array();
        for (const auto& h : square_scan(f, *scan)) {
            Json e;
            e["x"] = h.x;
            e["n"] = h.n;
            e["root"] = h.root;
            e["primitive"] = h.primitive;
            hits.push_back(e);
        }
        j["xmax"] = *scan;
        j["squares"] = hits;
    } else {
        Json ms = Json::array();
        for (const auto& m : family_members(f, count.value_or(10))) {
            Json e;
            e["x"] = m.x;
            e["n"] = m.n;
            ms.push_back(e);
        }
        j["members"] = ms;
    }
    return {j, {}, kExitOk};
}

Json realization_json(const RealizationParams& p, const SplitGraph& s) {
    Json j = io::realization_params_json(p);
    const GraphStats st = graph_stats(s);
    j["triangleType"] = std::string(triangle_type_name(triangle_type(s, 0, 1, 2)));
    j["balanced"] = st.balanced;
    j["allActive"] = st.all_active;
    j["indecomposable"] = st.indecomposable_active;
    j["graph"] = io::split_graph_json(s);
    return j;
}

Outcome cmd_realize(u64 x, u64 y, u64 z, std::optional<u64> d_a, bool all_active, const std::string& format,
                    bool collapse, bool phi) {
    const auto t = triple_for(x, y, z);
    if (!t)
        throw DomainError("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                          ") is not a Delta-triple of any n");
    std::vector<std::pair<RealizationParams, SplitGraph>> made;
    if (all_active) {
        for (SplitGraph& s : active_realizations(*t)) made.emplace_back(realization_params(*t, s.i_degree(0)), std::move(s));
    } else {
        const RealizationParams p = realization_params(*t, d_a.value_or(t->z));
        made.emplace_back(p, realize_graph(p));
    }

    Outcome o;
    if (format == "dot") {
        for (const auto& [p, s] : made) {
            const std::string name = "S_" + std::to_string(t->n) + "_dA" + std::to_string(p.d_a);
            o.text += phi ? io::factor_graph_dot(s, name)
                          : io::split_graph_dot(s, collapse ? io::KStyle::Collapsed : io::KStyle::Expanded, name);
        }
        o.results = nullptr;
        return o;
    }
    if (!all_active) {
        o.results = realization_json(made.front().first, made.front().second);
        return o;
    }
    o.results["n"] = t->n;
    o.results["triple"] = io::triple_json(*t);
    Json list = Json::array();
    for (const auto& [p, s] : made) list.push_back(realization_json(p, s));
    o.results["realizations"] = list;
    return o;
}

Outcome cmd_verify(const std::string& suite, u64 max) {
    Outcome o;
    std::ostringstream text;
    for (const SuiteReport& r : run_suites(suite, max)) {
        Json j;
        j["suite"] = r.suite;
        j["max"] = r.max;
        j["checked"] = r.checked;
        j["passed"] = r.checked - r.failed;
        j["failed"] = r.failed;
        j["ok"] = r.ok();
        j["samples"] = r.samples;
        text << j.dump() << '\n';
        if (!r.ok()) o.code = kExitVerification;
    }
    o.text = text.str();
    o.results = nullptr;
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Differences of complementary divisors: membership, classification, families, split graphs"};
    app.name("ndelta");
    app.require_subcommand(1);
    bool report = false;
    app.add_flag("--report", report, "wrap the payload with command, inputs and elapsedMs");

    std::string n_text;
    auto* check = app.add_subcommand("check", "membership with triples and primitivity");
    check->add_option("n", n_text)->required();
    auto* triples = app.add_subcommand("triples", "all Delta-triples of n");
    triples->add_option("n", n_text)->required();
    auto* primitive = app.add_subcommand("primitive", "decompositions n = alpha^2 m with m primitive");
    primitive->add_option("n", n_text)->required();
    auto* classify_cmd = app.add_subcommand("classify", "decide n by the first applicable rule");
    classify_cmd->add_option("n", n_text)->required();

    auto* enumerate = app.add_subcommand("enumerate", "members up to --max");
    std::string max_text;
    std::string format = "json";
    enumerate->add_option("--max", max_text)->required();
    bool prim_only = false, squares_only = false, odd_only = false;
    auto* f_prim = enumerate->add_flag("--primitive-only", prim_only);
    auto* f_sq = enumerate->add_flag("--squares-only", squares_only);
    auto* f_odd = enumerate->add_flag("--odd-only", odd_only);
    f_prim->excludes(f_sq)->excludes(f_odd);
    f_sq->excludes(f_odd);
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* family = app.add_subcommand("family", "cubic generating family (ax+b)(2ax+c)(alpha x+beta)");
    i64 fa = 0, fb = 0, fc = 0;
    std::optional<u64> count, scan;
    family->add_option("--a", fa)->required();
    family->add_option("--b", fb)->required();
    family->add_option("--c", fc)->required();
    auto* o_count = family->add_option("--count", count);
    auto* o_scan = family->add_option("--square-scan", scan);
    o_count->excludes(o_scan);

    auto* realize = app.add_subcommand("realize", "split graphs realising a Delta-triple");
    std::vector<std::string> xyz;
    std::optional<u64> d_a;
    bool all_active = false, collapse = false, phi = false;
    std::string realize_format = "json";
    realize->add_option("xyz", xyz)->required()->expected(3);
    auto* o_da = realize->add_option("--da", d_a);
    auto* o_all = realize->add_flag("--all-active", all_active);
    o_da->excludes(o_all);
    realize->add_option("--format", realize_format)->check(CLI::IsMember({"json", "dot"}));
    realize->add_flag("--collapse-k", collapse, "DOT: one box per K neighbourhood class");
    realize->add_flag("--phi", phi, "DOT: the factor graph with its flow orientation");

    auto* verify = app.add_subcommand("verify", "self-verification suites");
    std::string suite;
    std::string verify_max = "100000";
    verify->add_option("--suite", suite)->required()->check(
        CLI::IsMember({"bounds", "classification", "families", "graphs", "all"}));
    verify->add_option("--max", verify_max);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ndelta: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string command;
    Json inputs;
    try {
        if (*check || *triples || *primitive || *classify_cmd) {
            const u64 n = parse_at_least_two(n_text, "n");
            inputs["n"] = n;
            if (*check) command = "check", o = cmd_check(n);
            if (*triples) command = "triples", o = cmd_triples(n);
            if (*primitive) command = "primitive", o = cmd_primitive(n);
            if (*classify_cmd) command = "classify", o = cmd_classify(n);
        } else if (*enumerate) {
            command = "enumerate";
            const u64 max = parse_natural(max_text, "--max");
            const Filter filter = prim_only ? Filter::Primitive : squares_only ? Filter::Squares
                                : odd_only  ? Filter::Odd
                                            : Filter::None;
            inputs["max"] = max;
            inputs["filter"] = filter_name(filter);
            inputs["format"] = format;
            o = cmd_enumerate(max, filter, format);
        } else if (*family) {
            command = "family";
            inputs["a"] = fa;
            inputs["b"] = fb;
            inputs["c"] = fc;
            if (count) inputs["count"] = *count;
            if (scan) inputs["squareScan"] = *scan;
            if (count && *count == 0) throw UsageError("--count must be at least 1");
            o = cmd_family(fa, fb, fc, count, scan);
        } else if (*realize) {
            command = "realize";
            const u64 x = parse_natural(xyz[0], "x"), y = parse_natural(xyz[1], "y"), z = parse_natural(xyz[2], "z");
            inputs["triple"] = Json::array({x, y, z});
            if (d_a) inputs["dA"] = *d_a;
            inputs["allActive"] = all_active;
            inputs["format"] = realize_format;
            o = cmd_realize(x, y, z, d_a, all_active, realize_format, collapse, phi);
        } else if (*verify) {
            command = "verify";
            const u64 max = parse_natural(verify_max, "--max");
            inputs["suite"] = suite;
            inputs["max"] = max;
            o = cmd_verify(suite, max);
        }
    } catch (const UsageError& e) {
        err << "ndelta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "ndelta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "ndelta: overflow: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "ndelta: verification failed: " << e.what() << '\n';
        return kExitVerification;
    }

    if (report) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        Json r;
        r["command"] = command;
        r["inputs"] = inputs;
        r["results"] = o.results.is_null() ? Json(o.text) : o.results;
        r["elapsedMs"] = ms.count();
        out << r.dump() << '\n';
    } else if (o.results.is_null()) {
        out << o.text;
    } else {
        out << o.results.dump() << '\n';
    }
    return o.code;
}

}  // namespace ndelta::cli
