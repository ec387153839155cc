// kemeny: command-line front end.
//
//   kemeny compute <file> [--resistances] [--moments v|all] [--exact|--float]
//   kemeny barbell <a> <b> <c> [--closed-form-only] | kemeny barbell --n N
//   kemeny braess scan <file> [--max-set-size N] [--max-non-edges N]
//   kemeny braess check <file> --edges "0-2,4-6"
//   kemeny verify <suite> [--max-n N] [--seed S]
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 cap exceeded.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kemeny/braess.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/edge_list.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/report_json.hpp"
#include "kemeny/resistance.hpp"
#include "kemeny/verify.hpp"

namespace {

using namespace kemeny;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct RunConfig {
    bool table = false;
    bool floating = false;
    std::size_t float_cutoff = 64;
    bool resistances = false;
    std::string moments;
    bool closed_form_only = false;
    std::size_t barbell_n = 0;
    std::vector<std::size_t> barbell_abc;
    std::size_t max_set_size = 2;
    std::size_t max_non_edges = 20;
    std::string edges;
    std::string file;
    std::string suite;
    std::size_t max_n = 5;
    std::uint64_t seed = 0;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(const Rational& q) {
    std::ostringstream os;
    os << q.str() << " (" << std::setprecision(12) << q.to_double() << ")";
    return os.str();
}

int cmd_compute(const RunConfig& cfg) {
    const Graph g = read_edge_list_file(cfg.file);
    require_kemeny_input(g);
    const NumericConfig numeric{cfg.floating ? NumericMode::floating : NumericMode::exact, cfg.float_cutoff};

    Json j;
    j["graph"] = cfg.file;
    j["n"] = g.n();
    j["m"] = g.m();

    if (numeric.use_float(g)) {
        const double k = kemeny_resistance_float(g);
        j["mode"] = "float";
        j["kemeny"] = nullptr;
        j["kemeny_float"] = k;
        Json methods;
        methods["resistance"] = Json{{"kemeny", nullptr}, {"kemeny_float", k}};
        methods["hitting_time"] = nullptr;
        j["methods"] = std::move(methods);
        j["agree"] = nullptr;
        if (cfg.table) {
            std::cout << "n " << g.n() << "  m " << g.m() << "\nkemeny (float) " << std::setprecision(12) << k << '\n';
        } else {
            emit(j);
        }
        return kExitOk;
    }

    const auto r = resistance_matrix<Rational>(g);
    const Rational k_res = kemeny_from_resistances(g, r);
    const KemenyReport hit = kemeny_hitting_oracle(g);
    const bool agree = k_res == hit.kemeny;

    j["mode"] = "exact";
    put_rational(j, "kemeny", k_res);
    Json methods;
    Json res;
    put_rational(res, "kemeny", k_res);
    methods["resistance"] = std::move(res);
    Json ht;
    put_rational(ht, "kemeny", hit.kemeny);
    Json starts = Json::array();
    for (const Rational& x : *hit.per_start_values) starts.push_back(x.str());
    ht["per_start"] = std::move(starts);
    methods["hitting_time"] = std::move(ht);
    j["methods"] = std::move(methods);
    j["agree"] = agree;

    if (cfg.resistances) {
        for (auto& [key, value] : resistance_json(r).items()) j[key] = value;
    }
    std::vector<MomentValue> moments;
    if (!cfg.moments.empty()) {
        if (cfg.moments == "all") {
            for (Vertex v = 0; v < g.n(); ++v) moments.push_back({v, moment_from_resistances(g, r, v)});
        } else {
            const Vertex v = detail::parse_index(cfg.moments, 0);
            require_vertex(g, v);
            moments.push_back({v, moment_from_resistances(g, r, v)});
        }
        j["moments"] = moments_json(moments);
    }

    if (cfg.table) {
        std::cout << "n " << g.n() << "  m " << g.m() << '\n';
        std::cout << "kemeny (resistance)   " << fmt(k_res) << '\n';
        std::cout << "kemeny (hitting time) " << fmt(hit.kemeny) << '\n';
        std::cout << "agree " << (agree ? "yes" : "NO") << '\n';
        if (cfg.resistances) {
            for (Vertex a = 0; a < g.n(); ++a) {
                for (Vertex b = 0; b < g.n(); ++b) std::cout << (b ? "\t" : "") << r(a, b).str();
                std::cout << '\n';
            }
        }
        for (const MomentValue& mv : moments) std::cout << "mu(" << mv.vertex << ") " << fmt(mv.value) << '\n';
    } else {
        emit(j);
    }
    return agree ? kExitOk : kExitFailed;
}

int cmd_barbell(const RunConfig& cfg) {
    if (cfg.barbell_n != 0) {
        if (!cfg.barbell_abc.empty()) throw CLI::ValidationError("give either a b c or --n, not both");
        const std::size_t n = cfg.barbell_n;
        const Rational thirds = kemeny_barbell_thirds(n);
        const Rational best = kemeny_barbell_best(n);
        Json j;
        j["n"] = n;
        j["thirds"] = {{"a", n / 3}, {"b", n / 3}, {"c", n / 3}};
        put_rational(j["thirds"], "kemeny", thirds);
        j["best"] = {{"a", n / 3 + 2}, {"b", n / 3 - 1}, {"c", n / 3 - 1}};
        put_rational(j["best"], "kemeny", best);
        j["best_larger"] = best > thirds;
        if (cfg.table) {
            std::cout << "thirds " << fmt(thirds) << "\nbest   " << fmt(best) << '\n';
        } else {
            emit(j);
        }
        return kExitOk;
    }
    if (cfg.barbell_abc.size() != 3) throw CLI::ValidationError("barbell needs a b c, or --n N");
    const ClosedFormResult r =
        barbell_result(cfg.barbell_abc[0], cfg.barbell_abc[1], cfg.barbell_abc[2], !cfg.closed_form_only);
    if (cfg.table) {
        std::cout << "closed form " << fmt(r.value) << '\n';
        if (r.direct) std::cout << "direct      " << fmt(*r.direct) << "\nequal " << (r.verified_against_direct ? "yes" : "NO") << '\n';
    } else {
        emit(closed_form_json(r));
    }
    return !r.direct || r.verified_against_direct ? kExitOk : kExitFailed;
}

void print_braess_table(const std::vector<BraessReport>& reports) {
    for (const BraessReport& r : reports) {
        std::string set;
        for (const Edge& e : r.edge_set) set += (set.empty() ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
        std::cout << std::left << std::setw(20) << set << ' ' << fmt(r.delta_kemeny) << (r.is_braess ? "  BRAESS" : "") << '\n';
    }
}

int cmd_braess_scan(const RunConfig& cfg) {
    const Graph g = read_edge_list_file(cfg.file);
    const auto reports = braess_scan(g, ScanConfig{cfg.max_set_size, cfg.max_non_edges}, cfg.file);
    std::size_t braess = 0;
    for (const auto& r : reports) braess += r.is_braess ? 1 : 0;
    if (cfg.table) {
        print_braess_table(reports);
        std::cout << braess << " Braess set(s) among " << reports.size() << '\n';
        return kExitOk;
    }
    Json j;
    j["graph"] = cfg.file;
    j["max_set_size"] = cfg.max_set_size;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(braess_json(r));
    j["reports"] = std::move(arr);
    j["braess_count"] = braess;
    j["any_braess"] = braess > 0;
    emit(j);
    return kExitOk;
}

int cmd_braess_check(const RunConfig& cfg) {
    const Graph g = read_edge_list_file(cfg.file);
    const BraessReport r = braess_check(g, parse_edge_spec(cfg.edges), cfg.file);
    if (cfg.table) {
        print_braess_table({r});
    } else {
        emit(braess_json(r));
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    bool ok = false;
    const Json j = verify::run_verify(cfg.suite, verify::VerifyConfig{cfg.max_n, cfg.seed}, ok);
    if (cfg.table) {
        for (const auto& s : j["suites"]) {
            for (const auto& c : s["checks"]) {
                std::cout << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>() << '/'
                          << c["name"].get<std::string>() << "  " << c["passed"] << '/' << c["total"] << '\n';
            }
        }
    } else {
        emit(j);
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kemeny's constant, effective resistances and Braess sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App* sub) {
        auto* json = sub->add_flag("--json", "JSON output (default)");
        auto* table = sub->add_flag("--table", cfg.table, "human-readable table output");
        json->excludes(table);
    };

    auto* compute = app.add_subcommand("compute", "Kemeny's constant of a graph by both methods");
    compute->add_option("file", cfg.file, "edge-list file")->required();
    compute->add_flag("--resistances", cfg.resistances, "print the resistance matrix");
    compute->add_option("--moments", cfg.moments, "moment at vertex v, or 'all'");
    auto* exact = compute->add_flag("--exact", "exact rational arithmetic (default)");
    auto* flt = compute->add_flag("--float", cfg.floating, "floating point above --float-cutoff vertices");
    exact->excludes(flt);
    compute->add_option("--float-cutoff", cfg.float_cutoff, "vertex count above which --float applies")
        ->capture_default_str();
    add_format(compute);

    auto* barbell = app.add_subcommand("barbell", "closed form of B(1,a,b,c) against direct computation");
    barbell->add_option("abc", cfg.barbell_abc, "a b c")->expected(0, 3)->check(CLI::PositiveNumber);
    barbell->add_flag("--closed-form-only", cfg.closed_form_only, "skip the direct computation");
    barbell->add_option("--n", cfg.barbell_n, "compare the n/3 split with the best split");
    add_format(barbell);

    auto* braess = app.add_subcommand("braess", "Braess edge sets");
    braess->require_subcommand(1);
    auto* scan = braess->add_subcommand("scan", "every non-edge set up to --max-set-size");
    scan->add_option("file", cfg.file, "edge-list file")->required();
    scan->add_option("--max-set-size", cfg.max_set_size)->capture_default_str();
    scan->add_option("--max-non-edges", cfg.max_non_edges)->capture_default_str();
    add_format(scan);
    auto* check = braess->add_subcommand("check", "Delta K of one edge set");
    check->add_option("file", cfg.file, "edge-list file")->required();
    check->add_option("--edges", cfg.edges, "edge set, e.g. \"0-2,4-6\"")->required();
    add_format(check);

    auto* verify_cmd = app.add_subcommand("verify", "invariant suites");
    verify_cmd->add_option("suite", cfg.suite, "closed-forms | separation | trees | braess | all")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--max-n", cfg.max_n)->capture_default_str();
    verify_cmd->add_option("--seed", cfg.seed)->capture_default_str();
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) return cmd_compute(cfg);
        if (*barbell) return cmd_barbell(cfg);
        if (*scan) return cmd_braess_scan(cfg);
        if (*check) return cmd_braess_check(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
