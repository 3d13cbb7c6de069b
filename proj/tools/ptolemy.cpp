// command line front end; one JSON object per line on stdout
#include "CLI11.hpp"
#include "json.hpp"
#include "ptolemy/analyzer.hpp"
#include "ptolemy/braided.hpp"
#include "ptolemy/combing.hpp"
#include "ptolemy/mosher.hpp"
#include "ptolemy/treepair.hpp"
#include "ptolemy/words.hpp"
#include <chrono>
#include <iostream>
#include <random>
#include <thread>

using namespace ptolemy;
using json = nlohmann::json;

namespace {

const char* kVersion = "0.1.0";

struct Config {
    bool star = false, reduced = false, trace = false, pretty = false;
    unsigned seed = 1;
    int kmax = 30, rmax = 4, samples = 100, n = 8, maxLen = 8, ball = 12, extra = 4;
    std::vector<int> depths{4, 8, 12};
};

std::string fnv_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

json config_json(const std::string& cmd, const Config& c) {
    return {{"command", cmd}, {"star", c.star},   {"reduced", c.reduced}, {"seed", c.seed},   {"kmax", c.kmax},
            {"samples", c.samples}, {"n", c.n}, {"max_len", c.maxLen}, {"ball", c.ball}, {"extra", c.extra},
            {"depths", c.depths}, {"rmax", c.rmax}};
}

using Clock = std::chrono::steady_clock;
double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void emit(const std::string& cmd, const Config& c, json body, double seconds, bool pretty) {
    json cfg = config_json(cmd, c);
    body["version"] = kVersion;
    body["command"] = cmd;
    body["config_hash"] = fnv_hex(cfg.dump());
    body["timings"] = {{"total_s", seconds}};
    std::cout << (pretty ? body.dump(2) : body.dump()) << "\n";
}

json state_obj(const State& s) { return json::parse(state_json(s)); }

json element(const std::string& w, const Config& c) {
    check_generator_word(w);
    json j{{"word", w}};
    if (c.star) {
        j["pstate"] = json::parse(pstate_json(eval_star(w)));
    } else {
        State s = eval_word(w);
        j["state"] = state_obj(s);
        j["tree_pair"] = json::parse(tree_pair_json(to_tree_pair(s)));
    }
    return j;
}

std::string random_gen_word(std::mt19937& rng, int maxLen) {
    std::string w;
    int n = int(rng() % unsigned(maxLen + 1));
    for (int k = 0; k < n; ++k) w += "aAbB"[rng() % 4];
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ptolemy groupoid toolkit"};
    app.require_subcommand(1);
    Config c;
    std::string u, v;
    app.add_flag("--json", c.pretty, "pretty-print the JSON output");
    app.add_option("--seed", c.seed, "random seed");

    auto* eval = app.add_subcommand("eval", "evaluate a word in a and b");
    eval->add_option("word", u)->required();
    eval->add_flag("--star", c.star, "work in the punctured group");

    auto* mult = app.add_subcommand("mult", "product of two words");
    mult->add_option("u", u)->required();
    mult->add_option("v", v)->required();
    mult->add_flag("--star", c.star);

    auto* inv = app.add_subcommand("inv", "inverse of a word");
    inv->add_option("word", u)->required();
    inv->add_flag("--star", c.star);

    auto* wp = app.add_subcommand("wp", "decide whether two words are equal (v defaults to the empty word)");
    wp->add_option("u", u)->required();
    wp->add_option("v", v);
    wp->add_flag("--star", c.star);

    auto* comb = app.add_subcommand("comb", "combing of an element");
    comb->add_option("word", u)->required();
    comb->add_flag("--reduced", c.reduced, "free-reduced combing");
    comb->add_flag("--star", c.star, "comb in the punctured group");
    comb->add_flag("--emit-trace", c.trace, "include the flip trace");

    auto* an = app.add_subcommand("analyze", "experiments");
    an->require_subcommand(1);
    auto* corr = an->add_subcommand("corridor", "fellow-traveler corridor for neighbour pairs");
    corr->add_option("--kmax", c.kmax);
    corr->add_option("--samples", c.samples);
    corr->add_option("--max-len", c.maxLen);
    corr->add_option("--ball", c.ball, "exact ball radius");
    corr->add_option("--extra", c.extra, "extra search depth outside the ball");
    corr->add_flag("--reduced", c.reduced);
    auto* pd = an->add_subcommand("polygon-diameter", "diameter of the labeled polygon move graph");
    pd->add_option("--n", c.n);
    auto* dep = an->add_subcommand("departure", "departure profile on planted pairs");
    dep->add_option("--depths", c.depths);
    dep->add_option("--radius", c.rmax, "largest radius");
    auto* fd = an->add_subcommand("flipdist", "flip graph diameter of the n-gon");
    fd->add_option("--n", c.n);

    CLI11_PARSE(app, argc, argv);

    auto t0 = Clock::now();
    try {
        if (*eval) {
            emit("eval", c, element(u, c), secs(t0), c.pretty);
        } else if (*mult) {
            check_generator_word(u);
            check_generator_word(v);
            json j = element(u + v, c);
            j["u"] = u;
            j["v"] = v;
            emit("mult", c, j, secs(t0), c.pretty);
        } else if (*inv) {
            check_generator_word(u);
            json j = element(invert_generator_word(u), c);
            j["of"] = u;
            emit("inv", c, j, secs(t0), c.pretty);
        } else if (*wp) {
            check_generator_word(u);
            check_generator_word(v);
            bool eq = c.star ? eval_star(u) == eval_star(v) : eval_word(u) == eval_word(v);
            emit("wp", c, {{"u", u}, {"v", v}, {"equal", eq}}, secs(t0), c.pretty);
        } else if (*comb) {
            check_generator_word(u);
            json j{{"word", u}};
            if (c.star) {
                StarCombing s = tstar_combing(u);
                j["mosher"] = s.mosher;
                j["kernel"] = json::parse(braid_json(s.kernel));
                j["moves"] = s.moves;
                j["generators"] = s.generators;
            } else {
                State z = eval_word(u);
                std::string m = c.reduced ? reduced_combing(z) : combing(z);
                j["moves"] = m;
                j["length"] = m.size();
                j["generators"] = generator_word_of_moves(m);
                if (c.trace) j["trace"] = json::parse(trace_json(mosher_flip_sequence(z)));
            }
            emit("comb", c, j, secs(t0), c.pretty);
        } else if (*corr) {
            Ball ball(c.ball);
            DistanceOracle oracle(ball, c.extra);
            std::mt19937 rng(c.seed);
            int feasible = 0, inconclusive = 0, maxK = 0;
            for (int t = 0; t < c.samples; ++t) {
                std::string w = random_gen_word(rng, c.maxLen);
                auto path = [&](const std::string& g) {
                    State z = eval_word(g);
                    return path_states(c.reduced ? reduced_combing(z) : combing(z));
                };
                auto A = path(w);
                for (std::string g : {"a", "b"}) {
                    CorridorReport r = min_corridor_K(A, path(g + w), c.kmax, oracle);
                    if (r.status == CorridorReport::Feasible) {
                        ++feasible;
                        maxK = std::max(maxK, r.k);
                    } else {
                        ++inconclusive;
                    }
                }
            }
            emit("analyze corridor", c,
                 {{"pairs", 2 * c.samples}, {"feasible", feasible}, {"inconclusive", inconclusive}, {"max_k", maxK},
                  {"ball_states", ball.size()}},
                 secs(t0), c.pretty);
            return inconclusive ? 2 : 0;
        } else if (*pd) {
            PolygonGraphReport r = polygon_move_graph(c.n);
            json ecc = json::object();
            for (auto& [k, cnt] : r.eccentricity) ecc[std::to_string(k)] = cnt;
            emit("analyze polygon-diameter", c,
                 {{"n", r.n}, {"triangulations", r.triangulations}, {"states", r.states}, {"components", r.components},
                  {"diameter", r.diameter}, {"eccentricity", ecc}},
                 secs(t0), c.pretty);
        } else if (*dep) {
            int rmax = c.rmax;
            json rows = json::array();
            for (int d : c.depths) {
                State z = planted_pair(d);
                rows.push_back({{"depth", d},
                                {"unreduced", departure_profile({path_states(combing(z))}, rmax).D},
                                {"reduced", departure_profile({path_states(reduced_combing(z))}, rmax).D}});
            }
            emit("analyze departure", c, {{"rmax", rmax}, {"profiles", rows}}, secs(t0), c.pretty);
        } else if (*fd) {
            int threads = int(std::max(1u, std::thread::hardware_concurrency()));
            FlipDiameter f = flip_graph_report(c.n, threads);
            emit("analyze flipdist", c, {{"n", f.n}, {"triangulations", f.triangulations}, {"diameter", f.diameter}},
                 secs(t0), c.pretty);
        }
    } catch (std::exception& e) {
        std::cout << json{{"version", kVersion}, {"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
