#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ndp/diagram.hpp"
#include "ndp/errors.hpp"
#include "ndp/io.hpp"
#include "ndp/report.hpp"

namespace {

ndp::IdealDocument load_ideal(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ndp::parse_document(ss.str());
    }
    return ndp::parse_file(spec);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ndp::Error("cannot write '" + out_path + "'");
    out << text;
}

int report_exit(const ndp::Report& rep) {
    for (const auto& r : rep.results)
        if (r.details.contains("status") && r.details["status"] == "exhausted")
            return 2; // inconclusive, not a verdict
    return rep.overall_verdict() ? 0 : 1;
}

std::string render(const ndp::Report& rep, const std::string& format) {
    if (format == "json") return rep.to_json().dump(2) + "\n";
    if (format == "text") return rep.to_text();
    throw ndp::Error("unsupported format '" + format + "' for this command");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ndp: decide and certify partial linearity of monomial ideals"};
    app.require_subcommand(1);

    std::string ideal_path, target_path, out_path;
    std::string format = "text";
    std::string method = "auto", field_s = "q", mode = "auto", family;
    int d = -1, p = 2, n = 3, r = -1, threads = 0;
    std::size_t budget = 20000, search_budget = 1000000;

    auto* check = app.add_subcommand("check", "decide N_{d,p}");
    check->add_option("--ideal", ideal_path, "ideal file (or - for stdin)")->required();
    check->add_option("--d", d, "generator degree (default: inferred)");
    check->add_option("--p", p, "number of linear steps plus one (default 2)");
    check->add_option("--method", method, "auto|fast|oracle|locality|locality-lcms");
    check->add_option("--field", field_s, "q | fp | f<prime>");
    check->add_option("--threads", threads, "oracle threads (0 = default)");
    check->add_option("--budget", budget, "lcm lattice size cap");
    check->add_option("--out", out_path, "output file (default stdout)");
    check->add_option("--format", format, "text | json");

    auto* analyze = app.add_subcommand("analyze", "almost-linear shadow analysis");
    analyze->add_option("--ideal", ideal_path)->required();
    analyze->add_option("--field", field_s);
    analyze->add_option("--threads", threads);
    analyze->add_option("--budget", budget);
    analyze->add_option("--out", out_path);
    analyze->add_option("--format", format);

    auto* gen = app.add_subcommand("gen", "generate a named family member");
    int gen_p = -1;
    gen->add_option("--family", family, "fractal | sharp | power | bracket")->required();
    gen->add_option("--n", n, "number of variables");
    gen->add_option("--d", d, "degree parameter");
    gen->add_option("--p", gen_p, "p parameter");
    gen->add_option("--r", r, "recursion depth (fractal with n > 3)");
    gen->add_option("--out", out_path);
    std::string gen_format = "json";
    gen->add_option("--format", gen_format, "json | text");

    auto* shelling = app.add_subcommand("shelling", "shelling search / decision");
    shelling->add_option("--ideal", ideal_path, "start ideal")->required();
    shelling->add_option("--target", target_path, "target ideal")->required();
    shelling->add_option("--mode", mode, "auto | search | decide");
    shelling->add_option("--budget", search_budget, "max search states");
    shelling->add_option("--out", out_path);
    shelling->add_option("--format", format);

    auto* dual = app.add_subcommand("dual", "Alexander dual and dual complex facets");
    dual->add_option("--ideal", ideal_path)->required();
    dual->add_option("--out", out_path);
    std::string dual_format = "text";
    dual->add_option("--format", dual_format, "text (facet list) | json");

    auto* diagram = app.add_subcommand("diagram", "SVG monomial triangle (3 variables)");
    diagram->add_option("--ideal", ideal_path)->required();
    diagram->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            ndp::CheckParams params;
            params.d = d;
            params.p = p;
            params.method = method;
            params.field = ndp::Field::parse(field_s);
            params.threads = threads;
            params.budget = budget;
            ndp::Report rep = ndp::cmd_check(load_ideal(ideal_path), params);
            emit(render(rep, format), out_path);
            return report_exit(rep);
        }
        if (analyze->parsed()) {
            ndp::Report rep = ndp::cmd_analyze(load_ideal(ideal_path),
                                               ndp::Field::parse(field_s), threads, budget);
            emit(render(rep, format), out_path);
            return report_exit(rep);
        }
        if (gen->parsed()) {
            ndp::GenParams g;
            g.family = family;
            g.n = n;
            g.d = d;
            g.p = gen_p;
            g.r = r;
            ndp::IdealDocument doc = ndp::cmd_gen(g);
            emit(gen_format == "json" ? ndp::serialize_json(doc)
                                      : ndp::serialize_text(doc),
                 out_path);
            return 0;
        }
        if (shelling->parsed()) {
            ndp::Report rep = ndp::cmd_shelling(load_ideal(ideal_path),
                                                load_ideal(target_path), mode,
                                                search_budget);
            emit(render(rep, format), out_path);
            return report_exit(rep);
        }
        if (dual->parsed()) {
            ndp::IdealDocument doc = load_ideal(ideal_path);
            if (dual_format == "json")
                emit(ndp::cmd_dual(doc).to_json().dump(2) + "\n", out_path);
            else
                emit(ndp::dual_facets_text(doc), out_path);
            return 0;
        }
        if (diagram->parsed()) {
            ndp::IdealDocument doc = load_ideal(ideal_path);
            emit(ndp::render_triangle_svg(ndp::to_ideal(doc)), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
