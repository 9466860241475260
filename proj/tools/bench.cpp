// Timing harness for the Betti kernels: the OpenMP drivers against the
// serial reference, on the fractal family and on m^d.  Also asserts that
// both drivers produce identical tables, so a bench run doubles as a
// consistency check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ndp/betti.hpp"
#include "ndp/fractal.hpp"

using namespace ndp;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_table(const BettiTable& a, const BettiTable& b) {
    if (a.entries().size() != b.entries().size()) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        const auto& x = a.entries()[i];
        const auto& y = b.entries()[i];
        if (x.row != y.row || x.rank != y.rank || !(x.multidegree == y.multidegree))
            return false;
    }
    return true;
}

struct Case {
    std::string name;
    MonomialIdeal ideal;
    int max_row;
};

void run(const Case& c) {
    OracleOptions serial_opts;
    serial_opts.max_row = c.max_row;
    OracleOptions par_opts = serial_opts;

    BettiTable ts, tp, ss, sp;
    double t_serial = time_ms([&] { ts = graded_betti_serial(c.ideal, serial_opts); });
    double t_par = time_ms([&] { tp = graded_betti(c.ideal, par_opts); });
    double s_serial = time_ms([&] { ss = strand_betti_serial(c.ideal, serial_opts); });
    double s_par = time_ms([&] { sp = strand_betti(c.ideal, par_opts); });

    const bool ok = same_table(ts, tp) && same_table(ss, sp);
    std::printf("%-18s graded %8.1f ms | omp %8.1f ms (%.2fx)   strand %8.1f ms | "
                "omp %8.1f ms (%.2fx)   %s\n",
                c.name.c_str(), t_serial, t_par, t_par > 0 ? t_serial / t_par : 0.0,
                s_serial, s_par, s_par > 0 ? s_serial / s_par : 0.0,
                ok ? "tables agree" : "MISMATCH");
    if (!ok) std::exit(1);
}

} // namespace

int main() {
    std::printf("betti kernels, serial reference vs OpenMP driver\n\n");
    for (int d : {7, 9, 11, 12})
        run({"sier3(" + std::to_string(d) + ") rows<=1", sier3(d), 1});
    for (int d : {6, 7})
        run({"sier3(" + std::to_string(d) + ") full", sier3(d), kAllRows});
    run({"m^6 (3 vars) full", power_of_maximal(3, 6), kAllRows});
    run({"m^3 (4 vars) full", power_of_maximal(4, 3), kAllRows});
    run({"sharp(4,4,3) full", [] {
             std::vector<Monomial> gens;
             for (const Monomial& w : monomials_of_degree(4, 4)) {
                 bool allone = true;
                 for (int i = 0; i < 4; ++i) allone = allone && w.exponent(i) == 1;
                 if (!allone) gens.push_back(w);
             }
             return MonomialIdeal::from_generators(4, gens);
         }(),
         kAllRows});
    return 0;
}
