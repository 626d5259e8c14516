// relnum: exact certification of relation numbers for the groups
// generated by [[1,1],[0,1]] and [[1,0],[alpha,1]].
//
// Every subcommand prints one line of JSON on stdout:
//   {"status": "certified" | "inconclusive" | "failed", "payload": ..., "timing_ms": ...}
// Exact values are strings; approximations are marked as such. Exit code 0
// unless the status is "failed" (1) or the invocation itself is bad (2).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relnum/relnum.hpp"

using namespace relnum;
using nlohmann::json;

namespace {

#ifndef RELNUM_TABLE1_PATH
#define RELNUM_TABLE1_PATH "data/table1.json"
#endif

struct CommandResult {
    std::string status;  // certified | inconclusive | failed
    json payload;
};

// widths come in as "1e-12", "0.001", "1/1000" or plain integers
BigRational parse_width(const std::string& text) {
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        BigRational mantissa = parse_width(text.substr(0, epos));
        long long exp = std::stoll(text.substr(epos + 1));
        Int scale = pow10(static_cast<unsigned>(exp < 0 ? -exp : exp));
        return exp < 0 ? mantissa / BigRational(scale) : mantissa * BigRational(scale);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        unsigned frac = static_cast<unsigned>(text.size() - dot - 1);
        return BigRational(Int(digits), pow10(frac));
    }
    Scalar s = parse_scalar(text);
    if (!s.is_rational()) throw ParseError("width must be rational: " + text);
    return s.rat();
}

int thread_cap() {
    const char* env = std::getenv("RELNUM_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

json inconclusive_reason(const std::string& reason) { return json{{"reason", reason}}; }

CommandResult run_orbit_test(const std::string& alpha_text, long long depth, int height) {
    Scalar alpha = parse_scalar(alpha_text);
    SearchBudget budget(depth, height);
    auto witness = orbit_bfs(alpha, budget);
    if (!witness)
        return {"inconclusive",
                inconclusive_reason("no half-odd orbit value within depth " +
                                    std::to_string(depth) + ", height " +
                                    std::to_string(height) + " bits")};
    if (!verify_witness(*witness)) return {"failed", json{{"error", "witness re-verification failed"}}};
    return {"certified", json(*witness)};
}

CommandResult run_farey_ball(const std::string& alpha_text, int syllables, int exponents) {
    BallExploration ball = explore_ball(parse_scalar(alpha_text), syllables, exponents);
    return {"certified", json(ball)};
}

CommandResult run_farey_cycle(const std::string& alpha_text, int syllables, int exponents) {
    BallExploration ball = explore_ball(parse_scalar(alpha_text), syllables, exponents);
    json stats{{"edges", ball.edges.size()},
               {"vertices", ball.vertices.size()},
               {"words_generated", ball.words_generated}};
    auto cycle = find_cycle(ball);
    if (!cycle) {
        json payload = inconclusive_reason("no cycle within the explored ball");
        payload["ball"] = stats;
        return {"inconclusive", payload};
    }
    if (!check_certificate(*cycle))
        return {"failed", json{{"error", "cycle certificate re-verification failed"}}};
    json payload(*cycle);
    payload["ball"] = stats;
    return {"certified", payload};
}

CommandResult run_relation_poly(int n, bool roots, const BigRational& width) {
    IntPoly p = relation_poly(n);
    json payload{{"n", n}, {"polynomial", p}};
    if (roots) {
        auto intervals = isolate_all(p);
        json root_list = json::array();
        for (const auto& iv : intervals) root_list.push_back(json(refine(p, iv, width)));
        payload["roots"] = root_list;
        payload["max_root"] = json(max_root(p, width));
    }
    return {"certified", payload};
}

CommandResult run_alphas(int n, const BigRational& width) {
    auto entries = alpha_sequence(n, width);
    return {"certified", json{{"entries", entries}}};
}

CommandResult run_gap(int n, const BigRational& width) {
    BigRational gap = gap_to_four(n, width);
    return {"certified",
            json{{"n", n}, {"gap", to_string(gap)}, {"approx", decimal_string(gap, 12)}}};
}

CommandResult run_certify(int n_max) {
    const BigRational targets[] = {BigRational(1, 2), BigRational(1, 3), BigRational(2)};
    json results = json::array();
    bool all = true;
    for (int n = 1; n <= n_max; ++n) {
        IntPoly p = relation_poly(n);
        bool monic_deg = p.is_monic() && p.degree() == n;
        bool distinct = count_all_roots(sturm_chain(p)) == n;
        bool squarefree = poly_gcd(p, derivative(p)).degree() == 0;
        SturmChain chain = sturm_chain(p);
        bool in_range = sign_at(p, BigRational(0)) != 0 && sign_at(p, BigRational(4)) != 0 &&
                        count_roots(chain, Bound::neg_inf(), Bound::at(BigRational(0))) == 0 &&
                        count_roots(chain, Bound::at(BigRational(4)), Bound::pos_inf()) == 0;
        bool clockwise = clockwise_check(n);
        json winding;
        bool winding_all = true;
        for (const auto& t : targets) {
            bool ok = winding_count_check(n, t);
            winding[to_string(t)] = ok;
            winding_all = winding_all && ok;
        }
        bool row_ok = monic_deg && distinct && squarefree && in_range && clockwise && winding_all;
        all = all && row_ok;
        results.push_back(json{{"n", n},
                               {"monic_degree_n", monic_deg},
                               {"distinct_real_roots", distinct},
                               {"squarefree", squarefree},
                               {"roots_in_0_4", in_range},
                               {"clockwise", clockwise},
                               {"winding", winding}});
    }
    return {all ? "certified" : "failed", json{{"results", results}, {"all_pass", all}}};
}

CommandResult run_verify_table(const std::string& path) {
    TableReport report = verify_table(load_table(path));
    return {report.all_pass ? "certified" : "failed", json(report)};
}

CommandResult run_rotation(const std::string& alpha_text) {
    RotationSample sample = classify_rotation(parse_scalar(alpha_text).rat());
    return {"inconclusive", json(sample)};  // heuristic output, never a certificate
}

CommandResult run_rotation_scan(const std::string& lo, const std::string& hi, int samples) {
    auto report = rotation_density_scan(parse_scalar(lo).rat(), parse_scalar(hi).rat(), samples);
    return {"inconclusive", json{{"samples", report}}};
}

CommandResult run_check(const std::string& path) {
    json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw MissingData("cannot open '" + path + "'");
        in >> j;
    }
    if (j.contains("payload")) j = j["payload"];  // accept a whole CommandResult line
    if (j.contains("word")) {
        Witness w = j.get<Witness>();
        bool ok = verify_witness(w);
        return {ok ? "certified" : "failed", json{{"type", "witness"}, {"valid", ok}}};
    }
    if (j.contains("edge_words")) {
        CycleCertificate cert = j.get<CycleCertificate>();
        bool ok = check_certificate(cert);
        return {ok ? "certified" : "failed", json{{"type", "cycle"}, {"valid", ok}}};
    }
    throw ParseError("JSON is neither a witness nor a cycle certificate");
}

int emit(const CommandResult& r, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json line{{"status", r.status}, {"payload", r.payload}, {"timing_ms", ms}};
    std::cout << line.dump() << "\n";
    return r.status == "failed" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relation-number certification"};
    app.require_subcommand(1);
    (void)thread_cap();  // RELNUM_THREADS honored as a cap; evaluation is sequential

    std::string alpha_text, lo_text = "3", hi_text = "4", path_text;
    std::string width_text = "1e-12";
    long long depth = 14;
    int height = 256, syllables = 6, exponents = 4, n = 25, samples = 0;
    bool roots = false;

    auto* orbit = app.add_subcommand("orbit-test", "search the orbits of 0 and infinity for a half-odd integer");
    orbit->add_option("alpha", alpha_text, "scalar, e.g. 41/18 or 2+1*sqrt(2)")->required();
    orbit->add_option("--depth", depth, "generator applications")->capture_default_str();
    orbit->add_option("--height", height, "bit-size cap on visited points")->capture_default_str();

    auto* ball = app.add_subcommand("farey-ball", "enumerate a bounded ball of the generalized Farey graph");
    ball->add_option("alpha", alpha_text)->required();
    ball->add_option("--syllables", syllables)->capture_default_str();
    ball->add_option("--exponents", exponents)->capture_default_str();

    auto* cycle = app.add_subcommand("farey-cycle", "find a cycle in the generalized Farey graph");
    cycle->add_option("alpha", alpha_text)->required();
    cycle->add_option("--syllables", syllables)->capture_default_str();
    cycle->add_option("--exponents", exponents)->capture_default_str();

    auto* rpoly = app.add_subcommand("relation-poly", "the degree-n relation polynomial");
    rpoly->add_option("n", n)->required()->check(CLI::PositiveNumber);
    rpoly->add_flag("--roots", roots, "isolate all real roots");
    rpoly->add_option("--width", width_text)->capture_default_str();

    auto* alphas = app.add_subcommand("alphas", "maximal roots alpha_1 .. alpha_N, certified increasing");
    alphas->add_option("N", n)->required()->check(CLI::PositiveNumber);
    alphas->add_option("--width", width_text)->capture_default_str();

    auto* gap = app.add_subcommand("gap", "exact upper bound on 4 - alpha_n");
    gap->add_option("n", n)->required()->check(CLI::PositiveNumber);
    gap->add_option("--width", width_text)->capture_default_str();

    auto* certify = app.add_subcommand("certify", "distinct-roots, clockwise and winding certificates for n = 1..N");
    certify->add_option("N", n)->required()->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("verify-table", "replay the bundled table of rational relation numbers");
    table->add_option("--table", path_text, "path to table1.json");

    auto* rotation = app.add_subcommand("rotation", "rotation number of B_alpha A^-1 (approximate, informational)");
    rotation->add_option("alpha", alpha_text);
    rotation->add_option("--scan-lo", lo_text)->capture_default_str();
    rotation->add_option("--scan-hi", hi_text)->capture_default_str();
    rotation->add_option("--samples", samples, "scan sample count; 0 means single alpha");

    auto* check = app.add_subcommand("check", "re-verify a witness or cycle certificate from JSON");
    check->add_option("file", path_text, "path or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (orbit->parsed()) return emit(run_orbit_test(alpha_text, depth, height), start);
        if (ball->parsed()) return emit(run_farey_ball(alpha_text, syllables, exponents), start);
        if (cycle->parsed()) return emit(run_farey_cycle(alpha_text, syllables, exponents), start);
        if (rpoly->parsed()) return emit(run_relation_poly(n, roots, parse_width(width_text)), start);
        if (alphas->parsed()) return emit(run_alphas(n, parse_width(width_text)), start);
        if (gap->parsed()) return emit(run_gap(n, parse_width(width_text)), start);
        if (certify->parsed()) return emit(run_certify(n), start);
        if (table->parsed())
            return emit(run_verify_table(path_text.empty() ? RELNUM_TABLE1_PATH : path_text), start);
        if (rotation->parsed()) {
            if (samples > 0) return emit(run_rotation_scan(lo_text, hi_text, samples), start);
            if (alpha_text.empty()) throw ParseError("rotation needs alpha or --samples");
            return emit(run_rotation(alpha_text), start);
        }
        if (check->parsed()) return emit(run_check(path_text), start);
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        json line{{"status", "failed"}, {"payload", json{{"error", e.what()}}}, {"timing_ms", ms}};
        std::cout << line.dump() << "\n";
        return 1;
    }
    return 2;
}
