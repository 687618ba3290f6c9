#include "cli.hpp"

#include "rcalg/betti.hpp"
#include "rcalg/engine.hpp"
#include "rcalg/errors.hpp"
#include "rcalg/recipe.hpp"
#include "rcalg/series.hpp"
#include "rcalg/shapes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

namespace rcalg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_fixture_dir()
{
    if (const char* env = std::getenv("RCALG_FIXTURE_DIR"))
        return env;
#ifdef RCALG_FIXTURE_DIR
    return RCALG_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

namespace {

struct RunConfig
{
    int n = 3;
    uint32_t p = 32003;
    uint64_t seed = 1;
    int cap = -1;
    std::string format = "text";
    std::string split = "none";
};

void add_common(CLI::App* app, RunConfig& cfg, bool with_split)
{
    app->add_option("-n", cfg.n, "number of variables")->check(CLI::PositiveNumber);
    app->add_option("-p", cfg.p, "field characteristic (prime)");
    app->add_option("--seed", cfg.seed, "random seed");
    app->add_option("--cap", cfg.cap, "degree cap for non-Artinian quotients");
    app->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_split)
        app->add_option("--split", cfg.split, "mapping-cone splitting policy")
            ->check(CLI::IsMember({"none", "generator", "min-consistent"}));
}

json shape_json(const ResolutionShape& s)
{
    json mods = json::array();
    for (const auto& m : s.modules) {
        json terms = json::array();
        for (const auto& [t, k] : m.twists)
            terms.push_back({t, k});
        mods.push_back(terms);
    }
    return {{"modules", mods}, {"notices", s.notices}};
}

json betti_json(const BettiTable& b) { return json::parse(b.to_json()); }

json socle_json(const SocleProfile& s)
{
    json a = json::array();
    for (const auto& [d, m] : s.degrees)
        a.push_back({d, m});
    return a;
}

void print_shape(std::ostream& out, const ResolutionShape& s, const std::string& format, const std::string& kind)
{
    if (format == "json") {
        json j = shape_json(s);
        j["kind"] = kind;
        j["display"] = s.to_string();
        j["betti"] = betti_json(s.betti());
        out << j.dump(2) << '\n';
        return;
    }
    out << s.to_string() << "\n\n" << s.betti().to_text();
    for (const auto& note : s.notices)
        out << "note: " << note << '\n';
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& kv)
{
    std::map<std::string, long long> out;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParamError("expected name=value, got '" + s + "'");
        out[s.substr(0, eq)] = std::stoll(s.substr(eq + 1));
    }
    return out;
}

void print_symbolic(std::ostream& out, const SymbolicShape& s, const std::vector<std::string>& values,
                    const std::string& format, const std::string& kind)
{
    if (!values.empty()) {
        auto shape = s.evaluate(parse_params(values));
        shape.notices = s.notices;
        print_shape(out, shape, format, kind);
        return;
    }
    if (format == "json") {
        out << json{{"kind", kind}, {"display", s.to_string()}, {"params", s.params}, {"notices", s.notices}}.dump(2)
            << '\n';
        return;
    }
    out << s.to_string() << '\n';
    if (!s.params.empty()) {
        out << "parameters:";
        for (const auto& p : s.params)
            out << ' ' << p;
        out << " (nonnegative)\n";
    }
    for (const auto& note : s.notices)
        out << "note: " << note << '\n';
}

/// Minimal generator degrees with repetition, read off the first column of a table.
std::vector<int> generator_degrees(const BettiTable& b)
{
    std::vector<int> d;
    for (const auto& [ij, m] : b.beta)
        if (ij.first == 1)
            d.insert(d.end(), m, ij.second);
    return d;
}

struct Computed
{
    RecipeResult recipe;
    std::shared_ptr<const QuotientBasis> q;
    HilbertSeries hf;
    BettiTable betti;
    std::optional<SocleProfile> socle;
    GhostReport ghosts;
};

Computed compute(const std::string& recipe, int n, uint32_t p, uint64_t seed, int cap)
{
    Computed c;
    c.recipe = evaluate_recipe(make_ring(n, p), recipe, seed);
    const GradedIdeal& I = c.recipe.ideal;
    if (cap < 0 && static_cast<int>(I.gens.size()) < n && !I.known_quotient && !I.is_unit())
        throw CapError("fewer than n generators: the quotient is not Artinian, pass --cap");
    c.q = quotient_basis(I, cap);
    c.hf = c.q->hilbert();
    c.betti = betti_numbers(*c.q);
    if (c.q->artinian())
        c.socle = socle(*c.q);
    std::optional<int> twist;
    if (c.socle && c.socle->is_gorenstein())
        twist = c.socle->top() + n;
    c.ghosts = ghost_classify(c.betti, generator_degrees(c.betti), twist, n);
    return c;
}

int cmd_froberg(const RunConfig& cfg, const std::vector<int>& degrees, std::ostream& out)
{
    int cap = cfg.cap;
    if (cap < 0) {
        if (static_cast<int>(degrees.size()) < cfg.n)
            throw CapError("fewer than n forms: pass --cap");
        cap = std::accumulate(degrees.begin(), degrees.end(), 0) - static_cast<int>(degrees.size()) + 1;
    }
    HilbertSeries h = froberg_prediction(degrees, cfg.n, cap);
    if (cfg.format == "json")
        out << json{{"n", cfg.n}, {"degrees", degrees}, {"hilbert", h.trimmed().coeffs}}.dump() << '\n';
    else
        out << h.to_string() << '\n';
    return 0;
}

int cmd_resolve(const RunConfig& cfg, const std::string& recipe, int seeds, std::ostream& out)
{
    if (seeds < 1)
        throw ParamError("--seeds must be positive");
    Computed c = compute(recipe, cfg.n, cfg.p, cfg.seed, cfg.cap);
    std::vector<uint64_t> unstable;
    for (int k = 1; k < seeds; ++k) {
        Computed other = compute(recipe, cfg.n, cfg.p, cfg.seed + k, cfg.cap);
        if (!(other.betti == c.betti) || !(other.hf == c.hf))
            unstable.push_back(cfg.seed + k);
    }
    const SplitPolicy policy = parse_split_policy(cfg.split);
    std::optional<ResolutionShape> cone;
    bool cone_matches = false;
    std::string cone_error;
    if (policy != SplitPolicy::NONE || cfg.split != "none") {
        if (!c.recipe.is_link)
            throw ParamError("--split needs a recipe of the form link(C, X)");
    }
    if (c.recipe.is_link && cfg.split != "none") {
        const auto ci = c.recipe.link_ci.degrees();
        BettiTable src = betti_numbers(c.recipe.link_source);
        try {
            cone = mapping_cone_link(koszul_shape(ci), shape_from_betti(src),
                                     std::accumulate(ci.begin(), ci.end(), 0), policy, c.hf);
            cone_matches = *cone == shape_from_betti(c.betti);
        }
        catch (const SplitError& e) {
            cone_error = e.what();
        }
    }
    std::optional<CompressionReport> comp;
    if (c.recipe.is_link && c.socle)
        comp = is_relatively_compressed(c.recipe.ideal, c.recipe.link_ci);

    if (cfg.format == "json") {
        json j;
        j["recipe"] = recipe;
        j["n"] = cfg.n;
        j["p"] = cfg.p;
        j["seed"] = cfg.seed;
        j["hilbert"] = c.hf.trimmed().coeffs;
        j["betti"] = betti_json(c.betti);
        if (c.socle)
            j["socle"] = socle_json(*c.socle);
        json g = json::array();
        for (const auto& e : c.ghosts.entries)
            g.push_back({{"i", e.i}, {"j", e.j}, {"class", ghost_class_name(e.cls)}, {"excess", e.non_koszul_excess}});
        j["ghosts"] = g;
        j["stable"] = unstable.empty();
        j["warnings"] = c.recipe.warnings;
        if (comp)
            j["verdict"] = verdict_name(comp->verdict);
        if (cone)
            j["mapping_cone"] = {{"policy", cfg.split}, {"display", cone->to_string()}, {"matches", cone_matches}};
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "hilbert: " << c.hf.to_string() << '\n';
    out << c.betti.to_text();
    if (c.betti.window >= 0)
        out << "note: rows above " << c.betti.window << " are beyond the cap and not shown\n";
    out << "socle: " << (c.socle ? c.socle->to_string() : std::string("n/a (not Artinian within the cap)")) << '\n';
    out << c.ghosts.to_text();
    if (comp) {
        // hilbert and socle lines are already printed above
        std::string text = comp->to_text();
        out << text.substr(text.find('\n', text.find('\n') + 1) + 1);
    }
    if (cone)
        out << "mapping cone (" << cfg.split << "): " << cone->to_string() << '\n'
            << "mapping cone matches engine: " << (cone_matches ? "yes" : "no") << '\n';
    else if (!cone_error.empty())
        out << "mapping cone (" << cfg.split << "): " << cone_error << '\n';
    for (const auto& w : c.recipe.warnings)
        out << "warning: " << w << '\n';
    if (seeds > 1) {
        if (unstable.empty()) {
            out << "stability: STABLE across " << seeds << " seeds\n";
        }
        else {
            out << "stability: UNSTABLE (differs at seed";
            for (auto s : unstable)
                out << ' ' << s;
            out << ")\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- reproduce

ResolutionShape predict_from_json(const json& p, int n)
{
    const std::string kind = p.at("kind");
    auto ints = [&](const char* k) { return p.at(k).get<std::vector<int>>(); };
    if (kind == "gor-even")
        return rc_gor_even(p.value("n", n), p.at("t"), ints("ci"));
    if (kind == "aci")
        return aci_resolution(p.value("n", n), ints("degrees")).aci;
    if (kind == "aci-gorenstein")
        return aci_resolution(p.value("n", n), ints("degrees")).gorenstein;
    if (kind == "quadric-points")
        return quadric_points_resolution(p.at("N")).shape;
    if (kind == "quadric-gor")
        return rc_gor_odd_quadric(p.at("t"));
    if (kind == "mrc")
        return mrc_resolution(p.value("n", n), ints("ci"), p.at("t"));
    if (kind == "gor-odd") {
        std::map<std::string, long long> v;
        if (p.contains("params"))
            v = p.at("params").get<std::map<std::string, long long>>();
        return rc_gor_odd_shape(p.value("n", n), p.at("t"), ints("ci")).evaluate(v);
    }
    throw ParamError("unknown predictor '" + kind + "'");
}

BettiTable table_from_triples(const json& a)
{
    BettiTable b;
    for (const auto& t : a)
        b.set(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<long long>());
    return b;
}

void check_engine(const json& ck, CaseReport& rep)
{
    const int n = ck.at("n");
    const uint32_t p = ck.value("p", 32003u);
    const int cap = ck.value("cap", -1);
    const std::string recipe = ck.at("recipe");
    std::vector<uint64_t> seeds = ck.value("seeds", std::vector<uint64_t>{1, 2, 3});
    auto fail = [&](const std::string& what) {
        rep.pass = false;
        rep.lines.push_back("  FAIL " + what);
    };
    auto ok = [&](const std::string& what) { rep.lines.push_back("  ok   " + what); };

    std::optional<Computed> first;
    for (uint64_t seed : seeds) {
        Computed c = compute(recipe, n, p, seed, cap);
        const std::string tag = recipe + " [p=" + std::to_string(p) + " seed=" + std::to_string(seed) + "]";
        if (ck.contains("hf")) {
            std::string want = ck.at("hf");
            if (c.hf.to_string() == want)
                ok("hf " + want + " " + tag);
            else
                fail("hf " + c.hf.to_string() + " != " + want + " " + tag);
        }
        if (first && !(first->betti == c.betti))
            fail("UNSTABLE: Betti table differs from seed " + std::to_string(seeds.front()) + " " + tag);
        if (!first)
            first = std::move(c);
    }
    const Computed& c = *first;
    if (ck.contains("betti")) {
        BettiTable want = table_from_triples(ck.at("betti"));
        if (want == c.betti)
            ok("betti table");
        else
            fail("betti table\n" + c.betti.to_text() + "  expected\n" + want.to_text());
    }
    if (ck.contains("socle")) {
        std::string got = c.socle ? c.socle->to_string() : "n/a";
        if (got == ck.at("socle").get<std::string>())
            ok("socle " + got);
        else
            fail("socle " + got + " != " + ck.at("socle").get<std::string>());
    }
    if (ck.contains("level")) {
        bool got = c.socle && c.socle->is_level();
        if (got == ck.at("level").get<bool>())
            ok(std::string("level ") + (got ? "yes" : "no"));
        else
            fail(std::string("level ") + (got ? "yes" : "no"));
    }
    if (ck.contains("ghosts")) {
        for (const auto& g : ck.at("ghosts")) {
            const GhostEntry* e = c.ghosts.find(g.at("i"), g.at("j"));
            std::string what = "ghost (" + std::to_string(g.at("i").get<int>()) + "," +
                               std::to_string(g.at("j").get<int>()) + ") " + g.at("class").get<std::string>();
            if (!e) {
                fail(what + ": no ghost at this twist");
                continue;
            }
            bool good = ghost_class_name(e->cls) == g.at("class").get<std::string>();
            if (g.contains("excess"))
                good = good && e->non_koszul_excess == g.at("excess").get<long long>();
            if (good)
                ok(what + " excess " + std::to_string(e->non_koszul_excess));
            else
                fail(what + ": got " + ghost_class_name(e->cls) + " excess " + std::to_string(e->non_koszul_excess));
        }
    }
    if (ck.contains("verdict") || ck.contains("min_verdict")) {
        CompressionReport r = is_relatively_compressed(c.recipe.ideal, c.recipe.link_ci);
        if (ck.contains("verdict")) {
            std::string want = ck.at("verdict");
            if (want == verdict_name(r.verdict))
                ok("liaison verdict " + want + " (bound " + r.liaison.bound.to_string() + ")");
            else
                fail("liaison verdict " + std::string(verdict_name(r.verdict)) + " != " + want);
        }
        if (ck.contains("min_verdict")) {
            std::string want = ck.at("min_verdict");
            if (want == verdict_name(r.min_bound.verdict))
                ok("min verdict " + want + " (bound " + r.min_bound.bound.to_string() + ")");
            else
                fail("min verdict " + std::string(verdict_name(r.min_bound.verdict)) + " != " + want);
        }
    }
    if (ck.contains("predict")) {
        ResolutionShape want = predict_from_json(ck.at("predict"), n);
        ResolutionShape got = shape_from_betti(c.betti);
        if (want == got)
            ok("predicted shape " + want.to_string());
        else
            fail("predicted " + want.to_string() + " but engine " + got.to_string());
    }
    if (ck.contains("split")) {
        const auto ci = c.recipe.link_ci.degrees();
        ResolutionShape got = shape_from_betti(c.betti);
        try {
            ResolutionShape cone = mapping_cone_link(koszul_shape(ci), shape_from_betti(betti_numbers(c.recipe.link_source)),
                                                     std::accumulate(ci.begin(), ci.end(), 0),
                                                     parse_split_policy(ck.at("split")), c.hf);
            if (cone == got)
                ok("mapping cone (" + ck.at("split").get<std::string>() + ") equals engine table");
            else
                fail("mapping cone " + cone.to_string() + " != engine " + got.to_string());
        }
        catch (const SplitError& e) {
            fail(std::string("mapping cone: ") + e.what());
        }
    }
}

void run_check(const json& ck, CaseReport& rep)
{
    const std::string type = ck.at("type");
    if (type == "froberg") {
        const int n = ck.at("n");
        auto d = ck.at("degrees").get<std::vector<int>>();
        int cap = std::accumulate(d.begin(), d.end(), 0) + 1;
        std::string got = froberg_prediction(d, n, cap).to_string();
        std::string want = ck.at("hf");
        if (got == want) {
            rep.lines.push_back("  ok   froberg " + got);
        }
        else {
            rep.pass = false;
            rep.lines.push_back("  FAIL froberg " + got + " != " + want);
        }
    }
    else if (type == "predict") {
        ResolutionShape s = predict_from_json(ck, ck.value("n", 0));
        std::string want = ck.at("shape");
        if (s.to_string() == want) {
            rep.lines.push_back("  ok   " + ck.at("kind").get<std::string>() + " " + want);
        }
        else {
            rep.pass = false;
            rep.lines.push_back("  FAIL " + ck.at("kind").get<std::string>() + " " + s.to_string() + " != " + want);
        }
    }
    else if (type == "engine") {
        check_engine(ck, rep);
    }
    else {
        throw ParamError("unknown check type '" + type + "'");
    }
}

std::vector<std::string> fixture_files(const std::string& dir)
{
    std::vector<std::string> files;
    if (!fs::exists(dir))
        return files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParamError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_reproduce(const std::string& id, bool all, const std::string& dir, std::ostream& out)
{
    std::vector<std::string> files;
    for (const auto& f : fixture_files(dir)) {
        if (all || fs::path(f).stem().string() == id)
            files.push_back(f);
    }
    if (!all && files.empty())
        throw ParamError("no fixture named '" + id + "' in " + dir);
    std::vector<std::future<CaseReport>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(std::launch::async, [f] { return reproduce_fixture(f); }));
    int failed = 0;
    for (auto& j : jobs) {
        CaseReport r = j.get();
        out << (r.pass ? "PASS " : "FAIL ") << r.id << '\n';
        for (const auto& l : r.lines)
            out << l << '\n';
        failed += r.pass ? 0 : 1;
    }
    out << "summary: " << files.size() - failed << "/" << files.size() << " cases passed\n";
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------- search

struct SearchRow
{
    int d = 0, s = 0, c = 0;
    std::string verdict;
    std::string detail;
    std::string witness;
    std::string params() const
    {
        return "d=" + std::to_string(d) + " s=" + std::to_string(s) + " c=" + std::to_string(c);
    }
};

std::string repeat_list(int value, int count)
{
    std::string s;
    for (int k = 0; k < count; ++k)
        s += (k ? "," : "") + std::to_string(value);
    return s;
}

/// Links J by a general CI of its n smallest generator degrees; true if the
/// residual contains two independent linear forms.
std::optional<bool> second_link_has_two_linear(const GradedIdeal& J, const BettiTable& b, int n, uint64_t seed)
{
    std::vector<int> g = generator_degrees(b);
    if (static_cast<int>(g.size()) < n)
        return std::nullopt;
    g.resize(n);
    FieldRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<HomogPoly> gens;
    for (int d : g)
        gens.push_back(general_element(J, d, rng));
    GradedIdeal C(J.ring, gens);
    int top = std::accumulate(g.begin(), g.end(), 0) - n + 1;
    auto qc = quotient_basis(C, top + 1);
    if (!(qc->hilbert() == rational_series(g, n, top + 1)))
        return std::nullopt;
    C.known_quotient = qc;
    GradedIdeal K = ideal_quotient(C, J);
    return hilbert_function(K, 1).at(1) <= n - 2;
}

SearchRow search_point(const std::string& family, const RunConfig& cfg, int d, int s, int c,
                       const std::string& witness_dir)
{
    SearchRow row{d, s, c, "", "", ""};
    const int n = cfg.n;
    const int e = n * (d - 1);
    const int g = e - s;
    HilbertSeries hc = rational_series(std::vector<int>(n, d), n, e);
    if (c > hc.at(g)) {
        row.verdict = "SKIPPED";
        row.detail = "more forms than dim (R/c)_" + std::to_string(g);
        return row;
    }
    const std::string recipe = "link(ci(" + repeat_list(d, n) + "), sum(general-forms(" + repeat_list(d, n) +
                               "), general-forms(" + repeat_list(g, c) + ")))";
    Computed r = compute(recipe, n, cfg.p, cfg.seed, -1);
    bool hit = false;
    if (family == "koszul-ghosts") {
        hit = r.ghosts.count(GhostClass::NON_KOSZUL) > 0;
        row.detail = std::to_string(r.ghosts.count(GhostClass::NON_KOSZUL)) + " non-Koszul ghosts";
    }
    else if (family == "ghost-free") {
        hit = !r.ghosts.entries.empty();
        row.detail = std::to_string(r.ghosts.entries.size()) + " ghost twists";
    }
    else {
        auto res = second_link_has_two_linear(r.recipe.ideal, r.betti, n, cfg.seed);
        if (!res) {
            row.verdict = "SKIPPED";
            row.detail = "no complete intersection among the smallest generators";
            return row;
        }
        hit = !*res;
        row.detail = *res ? "second link contains two linear forms" : "second link has fewer than two linear forms";
    }
    row.verdict = hit ? "DISCOVERY" : "CONFIRMED";
    if (hit && !witness_dir.empty()) {
        fs::create_directories(witness_dir);
        fs::path path = fs::path(witness_dir) / (family + "-n" + std::to_string(n) + "-d" + std::to_string(d) + "-s" +
                                                 std::to_string(s) + "-c" + std::to_string(c) + "-seed" +
                                                 std::to_string(cfg.seed) + ".json");
        std::ofstream(path) << r.recipe.ideal.witness_json() << '\n';
        row.witness = path.string();
    }
    return row;
}

struct SearchGrid
{
    int d_min = 2, d_max = 6, c_max = 3, socle_max = 14;
    double budget = 0;
    std::string witness_dir;
};

int cmd_search(const std::string& family, const RunConfig& cfg, const SearchGrid& grid, std::ostream& out)
{
    if (cfg.n > 4 || grid.d_max > 8 || grid.socle_max > 14)
        throw ParamError("grid exceeds the default bounds (n <= 4, degrees <= 8, socle <= 14)");
    std::vector<SearchRow> rows;
    for (int d = grid.d_min; d <= grid.d_max; ++d) {
        const int e = cfg.n * (d - 1);
        for (int s = 1; s <= std::min(grid.socle_max, e - 1); ++s)
            for (int c = 1; c <= grid.c_max; ++c)
                rows.push_back(SearchRow{d, s, c, "", "", ""});
    }
    const auto start = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < rows.size();) {
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            SearchRow& r = rows[k];
            if (grid.budget > 0 && elapsed > grid.budget) {
                r.verdict = "INCOMPLETE";
                r.detail = "budget exceeded";
                continue;
            }
            try {
                r = search_point(family, cfg, r.d, r.s, r.c, grid.witness_dir);
            }
            catch (const Error& e) {
                r.verdict = "SKIPPED";
                r.detail = e.what();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    const bool incomplete =
        std::any_of(rows.begin(), rows.end(), [](const SearchRow& r) { return r.verdict == "INCOMPLETE"; });
    if (cfg.format == "json") {
        json a = json::array();
        for (const auto& r : rows)
            a.push_back({{"family", family}, {"n", cfg.n}, {"p", cfg.p}, {"seed", cfg.seed}, {"params", r.params()},
                         {"verdict", r.verdict}, {"detail", r.detail}, {"witness_path", r.witness}});
        out << json{{"rows", a}, {"incomplete", incomplete}}.dump(2) << '\n';
    }
    else if (cfg.format == "text") {
        for (const auto& r : rows)
            out << family << "  " << r.params() << "  " << r.verdict << "  " << r.detail << '\n';
        std::map<std::string, int> counts;
        for (const auto& r : rows)
            ++counts[r.verdict];
        out << "summary:";
        for (const auto& [v, k] : counts)
            out << ' ' << v << '=' << k;
        out << (rows.empty() ? " (empty grid)" : "") << '\n';
    }
    else {
        out << "family,n,p,seed,params,verdict,witness_path\n";
        for (const auto& r : rows)
            out << family << ',' << cfg.n << ',' << cfg.p << ',' << cfg.seed << ',' << r.params() << ',' << r.verdict
                << ',' << r.witness << '\n';
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw ParseError("not an integer list: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

CaseReport reproduce_fixture(const std::string& path)
{
    CaseReport rep;
    rep.id = fs::path(path).stem().string();
    rep.pass = true;
    try {
        json fx = json::parse(read_file(path));
        rep.id = fx.value("id", rep.id);
        if (fx.contains("description"))
            rep.lines.push_back("  " + fx.at("description").get<std::string>());
        for (const auto& ck : fx.at("checks"))
            run_check(ck, rep);
    }
    catch (const std::exception& e) {
        rep.pass = false;
        rep.lines.push_back(std::string("  FAIL error: ") + e.what());
    }
    return rep;
}

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args = args_in;
    for (auto& a : args)
        if (a == "-ci")
            a = "--ci";  // single-dash long spelling

    CLI::App app{"rcalg: Betti numbers and Hilbert functions of relatively compressed algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string degrees_s, ci_s;
    auto* froberg = app.add_subcommand("froberg", "Hilbert series predicted for general forms");
    add_common(froberg, cfg, false);
    froberg->add_option("-d", degrees_s, "comma separated degrees")->required();

    auto* predict = app.add_subcommand("predict", "resolution shapes from closed formulas");
    predict->require_subcommand(1);
    int t = 0, N = 0, s = 0, c = 0;
    std::vector<std::string> values;
    auto* p_even = predict->add_subcommand("gor-even", "relatively compressed Gorenstein, socle degree 2t");
    auto* p_odd = predict->add_subcommand("gor-odd", "relatively compressed Gorenstein, socle degree 2t+1");
    auto* p_mrc = predict->add_subcommand("mrc", "odd socle degree under the minimal resolution conjecture");
    for (auto* sc : {p_even, p_odd, p_mrc}) {
        add_common(sc, cfg, false);
        sc->add_option("-t", t)->required();
        sc->add_option("--ci", ci_s, "complete intersection degrees");
    }
    p_odd->add_option("--param", values, "name=value for the ghost parameters");
    auto* p_pts = predict->add_subcommand("quadric-points", "general points on a smooth quadric in P3");
    add_common(p_pts, cfg, false);
    p_pts->add_option("-N", N, "number of points")->required();
    auto* p_qg = predict->add_subcommand("quadric-gor", "Gorenstein quotient relative to a quadric, socle 2t+1");
    add_common(p_qg, cfg, false);
    p_qg->add_option("-t", t)->required();
    auto* p_aci = predict->add_subcommand("aci", "general almost complete intersection");
    add_common(p_aci, cfg, false);
    p_aci->add_option("-d", degrees_s, "n+1 comma separated degrees")->required();
    auto* p_level = predict->add_subcommand("level-link", "residual of a CI by general forms");
    add_common(p_level, cfg, false);
    p_level->add_option("--ci", ci_s)->required();
    p_level->add_option("-s", s, "socle degree")->required();
    p_level->add_option("-c", c, "number of forms")->required();
    p_level->add_option("--param", values, "name=value for the ghost parameters");

    std::string recipe;
    int seeds = 1;
    auto* resolve = app.add_subcommand("resolve", "compute HF, Betti table, socle and ghosts of a recipe");
    add_common(resolve, cfg, true);
    resolve->add_option("recipe", recipe, "construction, e.g. link(ci(3,3,3), general-forms(1,1,3))")->required();
    resolve->add_option("--seeds", seeds, "number of consecutive seeds to compare");

    std::string case_id, fixture_dir = default_fixture_dir();
    bool all = false;
    auto* reproduce = app.add_subcommand("reproduce", "run example fixtures");
    reproduce->add_option("case", case_id, "fixture id");
    reproduce->add_flag("--all", all, "run every fixture");
    reproduce->add_option("--fixtures", fixture_dir, "fixture directory");

    std::string family;
    SearchGrid grid;
    auto* search = app.add_subcommand("search", "scan a parameter grid for conjecture counterexamples");
    add_common(search, cfg, false);
    cfg.format = "text";
    search->add_option("family", family)->required()->check(CLI::IsMember({"two-linear-link", "ghost-free", "koszul-ghosts"}));
    search->add_option("--d-min", grid.d_min, "smallest CI degree");
    search->add_option("--d-max", grid.d_max, "largest CI degree");
    search->add_option("--c-max", grid.c_max, "largest number of forms");
    search->add_option("--socle-max", grid.socle_max, "largest socle degree");
    search->add_option("--budget", grid.budget, "seconds before remaining points are INCOMPLETE");
    search->add_option("--witness-dir", grid.witness_dir, "directory for discovery witnesses");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    if (search->parsed() && search->count("--format") == 0)
        cfg.format = "csv";

    try {
        if (froberg->parsed())
            return cmd_froberg(cfg, parse_int_list(degrees_s), out);
        if (p_even->parsed()) {
            print_shape(out, rc_gor_even(cfg.n, t, parse_int_list(ci_s)), cfg.format, "gor-even");
            return 0;
        }
        if (p_odd->parsed()) {
            print_symbolic(out, rc_gor_odd_shape(cfg.n, t, parse_int_list(ci_s)), values, cfg.format, "gor-odd");
            return 0;
        }
        if (p_mrc->parsed()) {
            print_shape(out, mrc_resolution(cfg.n, parse_int_list(ci_s), t), cfg.format, "mrc");
            return 0;
        }
        if (p_pts->parsed()) {
            PointsResolution r = quadric_points_resolution(N);
            if (cfg.format != "json") {
                out << "h-vector:";
                for (auto v : r.hvector)
                    out << ' ' << v;
                out << '\n';
            }
            print_shape(out, r.shape, cfg.format, "quadric-points");
            return 0;
        }
        if (p_qg->parsed()) {
            print_shape(out, rc_gor_odd_quadric(t), cfg.format, "quadric-gor");
            return 0;
        }
        if (p_aci->parsed()) {
            AciResult r = aci_resolution(cfg.n, parse_int_list(degrees_s));
            if (cfg.format != "json")
                out << "gorenstein (socle degree " << r.c << "): " << r.gorenstein.to_string() << '\n';
            print_shape(out, r.aci, cfg.format, "aci");
            return 0;
        }
        if (p_level->parsed()) {
            LevelShape L = general_forms_level_shape(cfg.n, parse_int_list(ci_s), s, c);
            if (cfg.format != "json")
                out << "forms of degree " << L.form_degree << ", R/(c + forms) has socle degree " << L.delta << '\n';
            print_symbolic(out, L.residual, values, cfg.format, "level-link");
            return 0;
        }
        if (resolve->parsed())
            return cmd_resolve(cfg, recipe, seeds, out);
        if (reproduce->parsed()) {
            if (!all && case_id.empty())
                throw ParamError("give a case id or --all");
            return cmd_reproduce(case_id, all, fixture_dir, out);
        }
        if (search->parsed())
            return cmd_search(family, cfg, grid, out);
    }
    catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace rcalg::cli
