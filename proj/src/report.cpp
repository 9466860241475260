#include "ndp/report.hpp"

#include <chrono>
#include <sstream>

#include "ndp/almost_linear.hpp"
#include "ndp/fractal.hpp"
#include "ndp/linearity.hpp"
#include "ndp/shelling.hpp"

namespace ndp {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json monomial_json(const Monomial& m) { return json(m.exponents()); }

json input_json(const IdealDocument& doc) {
    json j;
    j["nvars"] = doc.nvars;
    j["gens"] = doc.gens;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.field.empty()) j["field"] = doc.field;
    return j;
}

json verdict_details(const LinearityVerdict& v) {
    json d = json::object();
    if (v.witness_pair) {
        d["witness_pair"] = {monomial_json(v.witness_pair->first),
                             monomial_json(v.witness_pair->second)};
    }
    if (v.witness_vars) {
        std::vector<int> one_based;
        for (int x : *v.witness_vars) one_based.push_back(x + 1);
        d["witness_vars"] = one_based;
    }
    if (v.witness_lcm) d["witness_lcm"] = monomial_json(*v.witness_lcm);
    if (v.pattern) d["pattern"] = *v.pattern;
    return d;
}

json offenses_json(const NdpVerdict& v) {
    json arr = json::array();
    for (const auto& o : v.offenses)
        arr.push_back({{"s", o.s}, {"degree", o.degree},
                       {"multidegree", monomial_json(o.multidegree)}});
    return json{{"offenses", arr}, {"field", v.field_id}};
}

} // namespace

json betti_to_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [key, rank] : t.by_total_degree())
        arr.push_back({key.first, key.second, rank});
    return arr;
}

bool Report::overall_verdict() const {
    for (const auto& r : results)
        if (!r.verdict) return false;
    return true;
}

json Report::to_json() const {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input"] = input_json(input);
    j["params"] = params;
    json rs = json::array();
    for (const auto& r : results)
        rs.push_back({{"check", r.check},
                      {"verdict", r.verdict},
                      {"method", r.method},
                      {"details", r.details}});
    j["results"] = rs;
    if (betti) j["betti"] = betti_to_json(*betti);
    if (reg) j["regularity"] = *reg;
    j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "input: " << to_string(to_ideal(input)) << "\n";
    for (const auto& r : results) {
        out << r.check << ": " << (r.verdict ? "true" : "false") << " [" << r.method
            << "]";
        if (!r.details.empty()) out << " " << r.details.dump();
        out << "\n";
    }
    if (betti) {
        out << "betti (row, degree, rank):";
        for (const auto& [key, rank] : betti->by_total_degree())
            out << " (" << key.first << "," << key.second << "," << rank << ")";
        out << "\n";
    }
    if (reg) out << "regularity: " << *reg << "\n";
    out << "timing_ms: " << timing_ms << "\n";
    return out.str();
}

Report cmd_check(const IdealDocument& doc, const CheckParams& params) {
    auto start = Clock::now();
    MonomialIdeal I = to_ideal(doc);

    auto gen_deg = equigenerated_degree(I);
    int d = params.d;
    if (d < 0) {
        if (!gen_deg)
            throw NotEquigeneratedError(
                "generators have mixed degrees; pass --d explicitly");
        d = std::max(*gen_deg, 0);
    }
    const int p = params.p;
    if (p < 1) throw PreconditionError("check requires p >= 1");

    OracleOptions opts;
    opts.field = params.field;
    opts.threads = params.threads;
    opts.max_lattice = params.budget;

    Report rep;
    rep.command = "check";
    rep.input = doc;
    rep.params = {{"d", d}, {"p", p}, {"method", params.method},
                  {"field", params.field.id()}};

    const bool equi_d = !I.is_zero() && gen_deg && *gen_deg == d;
    std::string method = params.method;
    if (method == "auto" || method == "fast") {
        const bool fast_only = method == "fast";
        if (p == 1) {
            method = "degree";
        } else if (p == 2 && (equi_d || I.is_zero())) {
            if (is_squarefree(I) && d == 3)
                method = "cubic-squarefree";
            else if (is_primary(I) && d == 3 && !I.is_zero())
                method = "cubic-primary";
            else
                method = "dual-graph";
        } else if (fast_only) {
            throw PreconditionError("no fast certifier applies (need p = 2 and "
                                    "generators of degree d)");
        } else {
            method = "oracle";
        }
    }

    CheckResult res;
    res.check = "N_{" + std::to_string(d) + "," + std::to_string(p) + "}";
    res.method = method;

    if (!I.is_zero() && (!gen_deg || *gen_deg != d)) {
        // wrong generator degrees settle every method immediately
        res.verdict = false;
        json off = json::array();
        for (const Monomial& g : I.generators())
            if (g.degree() != d)
                off.push_back({{"s", 0}, {"degree", g.degree()},
                               {"multidegree", monomial_json(g)}});
        res.details = {{"offenses", off}};
        rep.results.push_back(std::move(res));
        rep.timing_ms = ms_since(start);
        return rep;
    }

    if (method == "degree") {
        res.verdict = true;
        rep.results.push_back(std::move(res));
    } else if (method == "cubic-squarefree") {
        LinearityVerdict v = cubic_squarefree_lp(I);
        res.verdict = v.linearly_presented;
        res.details = verdict_details(v);
        rep.results.push_back(std::move(res));
    } else if (method == "cubic-primary") {
        LinearityVerdict v = cubic_primary_lp(I);
        res.verdict = v.linearly_presented;
        res.details = verdict_details(v);
        rep.results.push_back(std::move(res));
    } else if (method == "dual-graph") {
        LinearityVerdict v = is_linearly_presented(I);
        res.verdict = v.linearly_presented;
        res.details = verdict_details(v);
        rep.results.push_back(std::move(res));
    } else if (method == "locality" || method == "locality-lcms") {
        LinearityVerdict v =
            locality_check(I, d, p,
                           method == "locality" ? LocalityMode::Vars : LocalityMode::Lcms,
                           opts);
        res.method = v.method;
        res.verdict = v.linearly_presented;
        res.details = verdict_details(v);
        rep.results.push_back(std::move(res));
    } else if (method == "oracle") {
        OracleOptions o = opts;
        o.max_row = p - 1;
        BettiTable table = I.is_zero() ? BettiTable({}, o.field.id(), p - 1)
                                       : graded_betti(I, o);
        NdpVerdict v = ndp_from_table(I, table, d, p);
        res.verdict = v.holds;
        res.details = offenses_json(v);
        rep.results.push_back(std::move(res));
        rep.betti = std::move(table);
    } else {
        throw PreconditionError("unknown method '" + method + "'");
    }

    rep.timing_ms = ms_since(start);
    return rep;
}

Report cmd_analyze(const IdealDocument& doc, const Field& field, int threads,
                   std::size_t budget) {
    auto start = Clock::now();
    MonomialIdeal I = to_ideal(doc);

    Report rep;
    rep.command = "analyze";
    rep.input = doc;
    rep.params = {{"field", field.id()}};

    AlmostLinearAnalysis a = analyze_almost_linear(I);
    CheckResult cert;
    cert.check = "shadow-system";
    cert.method = "almost-linear-structure";
    cert.verdict = a.valid;
    if (a.valid) {
        json socle = json::array();
        for (const Monomial& m : a.system.socle) socle.push_back(monomial_json(m));
        cert.details = {{"d", a.system.d},
                        {"socle", socle},
                        {"regularity", regularity_almost_linear(a.system)}};
    } else {
        json wit = json::array();
        for (const Monomial& m : a.witnesses) wit.push_back(monomial_json(m));
        cert.details = {{"violation", a.describe()}, {"witnesses", wit}};
    }
    rep.results.push_back(std::move(cert));

    OracleOptions opts;
    opts.field = field;
    opts.threads = threads;
    opts.max_lattice = budget;
    BettiTable table = graded_betti(I, opts);
    const int d = *equigenerated_degree(I);
    NdpVerdict nd = ndp_from_table(I, table, d, std::max(I.nvars() - 1, 1));

    CheckResult oracle;
    oracle.check =
        "N_{" + std::to_string(d) + "," + std::to_string(I.nvars() - 1) + "}";
    oracle.method = "oracle";
    oracle.verdict = nd.holds;
    oracle.details = offenses_json(nd);
    rep.results.push_back(std::move(oracle));

    CheckResult agree;
    agree.check = "certificate-oracle-agreement";
    agree.method = "cross-check";
    agree.verdict = a.valid == nd.holds;
    rep.results.push_back(std::move(agree));

    rep.reg = regularity(table);
    rep.betti = std::move(table);
    rep.timing_ms = ms_since(start);
    return rep;
}

IdealDocument cmd_gen(const GenParams& g) {
    if (g.family == "fractal") {
        if (g.n == 3 && g.d >= 1)
            return from_ideal(sier3(g.d), "sier3(" + std::to_string(g.d) + ")");
        if (g.p >= 1 && g.r >= 1)
            return from_ideal(sier_general(g.n, g.p, g.r),
                              "sier(" + std::to_string(g.n) + "," + std::to_string(g.p) +
                                  "," + std::to_string(g.r) + ")");
        throw PreconditionError("fractal family needs n=3 with --d, or --n --p --r");
    }
    if (g.family == "sharp") {
        if (g.d < 1 || g.p < 1)
            throw PreconditionError("sharp family needs --n --d --p");
        return from_ideal(sharp_example(g.n, g.d, g.p),
                          "sharp(" + std::to_string(g.n) + "," + std::to_string(g.d) +
                              "," + std::to_string(g.p) + ")");
    }
    if (g.family == "power") {
        if (g.d < 0) throw PreconditionError("power family needs --n --d");
        return from_ideal(power_of_maximal(g.n, g.d),
                          "m^" + std::to_string(g.d));
    }
    if (g.family == "bracket") {
        if (g.d < 1) throw PreconditionError("bracket family needs --n --d");
        return from_ideal(bracket_power(g.n, g.d),
                          "m^[" + std::to_string(g.d) + "]");
    }
    throw PreconditionError("unknown family '" + g.family +
                            "' (fractal, sharp, power, bracket)");
}

Report cmd_shelling(const IdealDocument& start_doc, const IdealDocument& target_doc,
                    const std::string& mode, std::size_t budget) {
    auto start = Clock::now();
    MonomialIdeal I = to_ideal(start_doc);
    MonomialIdeal J = to_ideal(target_doc);

    Report rep;
    rep.command = "shelling";
    rep.input = start_doc;
    rep.params = {{"mode", mode}, {"budget", budget},
                  {"target", input_json(target_doc)}};

    bool decided = false;
    if (mode == "decide" || mode == "auto") {
        try {
            NoShellDecision dec = noshell_decision(I, J);
            CheckResult r;
            r.check = "shelled-over";
            r.method = "noshell-decision";
            r.verdict = dec.shellable;
            if (dec.shellable) {
                json moves = json::array();
                for (const Monomial& m : dec.singleton_moves)
                    moves.push_back(monomial_json(m));
                r.details = {{"singleton_moves", moves}};
            } else {
                json shadow = json::array();
                for (const Monomial& m : dec.obstruction_shadow)
                    shadow.push_back(monomial_json(m));
                r.details = {{"obstruction_socle", monomial_json(*dec.obstruction_socle)},
                             {"obstruction_shadow", shadow}};
            }
            rep.results.push_back(std::move(r));
            decided = true;
        } catch (const Error& e) {
            if (mode == "decide") throw;
            // not almost linear on both sides: fall through to the search
        }
    }

    if (!decided || mode == "search") {
        ShellingResult sr = shelled_over(I, J, budget);
        CheckResult r;
        r.check = "shelled-over";
        r.method = "bfs-search";
        r.verdict = sr.status == ShellStatus::Shelled;
        const char* status = sr.status == ShellStatus::Shelled      ? "shelled"
                             : sr.status == ShellStatus::Impossible ? "impossible"
                                                                    : "exhausted";
        json details = {{"status", status}, {"states_explored", sr.states_explored}};
        if (sr.path) {
            json moves = json::array();
            for (const Monomial& m : sr.path->moves) moves.push_back(monomial_json(m));
            details["moves"] = moves;
        }
        r.details = std::move(details);
        rep.results.push_back(std::move(r));
    }

    rep.timing_ms = ms_since(start);
    return rep;
}

Report cmd_dual(const IdealDocument& doc) {
    auto start = Clock::now();
    MonomialIdeal I = to_ideal(doc);
    MonomialIdeal D = alexander_dual(I);

    Report rep;
    rep.command = "dual";
    rep.input = doc;
    rep.params = json::object();

    CheckResult r;
    r.check = "alexander-dual";
    r.method = "minimal-transversals";
    r.verdict = true;
    json facets = json::array();
    for (const auto& f : dual_complex_facets(I)) {
        std::vector<int> one_based;
        for (int x : f) one_based.push_back(x + 1);
        facets.push_back(one_based);
    }
    r.details = {{"dual", input_json(from_ideal(D))}, {"facets", facets}};
    rep.results.push_back(std::move(r));
    rep.timing_ms = ms_since(start);
    return rep;
}

std::string dual_facets_text(const IdealDocument& doc) {
    MonomialIdeal I = to_ideal(doc);
    std::ostringstream out;
    out << "# facets of the dual complex on " << I.nvars() << " vertices\n";
    for (const auto& f : dual_complex_facets(I)) {
        bool first = true;
        for (int x : f) {
            if (!first) out << ' ';
            first = false;
            out << 'x' << (x + 1);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ndp
