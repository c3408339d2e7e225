// One line per acceptance criterion. argv[1] is the path of the sptcheck binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "sptcrank/bivariate.hpp"
#include "sptcrank/bounds.hpp"
#include "sptcrank/divisors.hpp"
#include "sptcrank/lattice.hpp"
#include "sptcrank/qproducts.hpp"
#include "sptcrank/verifier.hpp"

using namespace sptcrank;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
    }
    if (!o.pass)
        ++failures;
    std::printf("[%s] AC%d %s: %s  %.2f s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome from_report(const verify::VerificationReport& r)
{
    std::ostringstream s;
    s << "status=" << verify::status_name(r.status) << " violations=" << r.violation_count;
    if (!r.violations.empty())
        s << " first m=" << r.violations.front().m << " n=" << r.violations.front().n << " "
          << r.violations.front().expected;
    return {r.status == verify::Status::Pass, s.str()};
}

// X, Y, Z from the series, from the divisor pair sets and, for even n, from the lattice counts
Outcome oracle_triangle()
{
    std::int64_t compared = 0, mismatches = 0;
    std::string first;
    auto mismatch = [&](long m, std::int64_t n, const char* what) {
        if (mismatches++ == 0)
            first = std::string(what) + " at m=" + std::to_string(m) + " n=" + std::to_string(n);
    };
    for (long m = 0; m <= 20; ++m) {
        const auto x = qseries::x_series(m, 1000);
        const auto y = qseries::y_series(m, 1000);
        const auto z = qseries::z_series(m, 1000);
        std::int64_t odd_z_sum = 0, even_first_sum = 0, even_z_sum = 0;
        for (std::int64_t n = 1; n <= 1000; ++n) {
            const auto c = divisors::census(m, n);
            const std::int64_t yd = c.a1 + c.b1 - c.a2 - c.b2;
            const std::int64_t zd = c.b1 - c.a2;
            if (y[n] != yd)
                mismatch(m, n, "Y");
            if (z[n] != zd)
                mismatch(m, n, "Z");
            if (y[n] != divisors::y_direct(m, n) || z[n] != divisors::z_direct(m, n))
                mismatch(m, n, "direct");

            if (n % 2) {
                odd_z_sum += zd;
                if (x[n] != odd_z_sum)
                    mismatch(m, n, "X odd");
            } else {
                // divisor form of the first sum of X at k = n, plus Z(n)
                for (auto d2 : divisors::divisors_of(n)) {
                    const std::int64_t d1 = n / d2;
                    if (d1 % 2 == 0)
                        continue;
                    if (d1 - 3 * d2 >= 1 + 2 * m)
                        ++even_first_sum;
                    if (d2 - 3 * d1 >= 1 + 2 * m)
                        --even_first_sum;
                }
                even_z_sum += zd;
                const std::int64_t divisor_path = even_first_sum + even_z_sum;
                const auto m1 = lattice::count_region({lattice::Region::Omega, m, n}).odd_y;
                const auto m2 = lattice::count_region({lattice::Region::OmegaPrime, m, n}).odd_y;
                if (x[n] != divisor_path)
                    mismatch(m, n, "X even divisor");
                if (x[n] != m2 - m1)
                    mismatch(m, n, "X even lattice");
                if (x[n] != divisors::x_direct(m, n))
                    mismatch(m, n, "X direct");
            }
            compared += 3;
        }
    }
    std::string d = std::to_string(compared) + " values, " + std::to_string(mismatches) + " mismatches";
    if (mismatches)
        d += ", first " + first;
    return {mismatches == 0, d};
}

Outcome bivariate_cross()
{
    const std::size_t order = 60;
    const auto even = qseries::even_partition_series(order);
    std::int64_t mismatches = 0;
    for (auto family : {bivariate::Family::C1, bivariate::Family::C5}) {
        const auto s = bivariate::spt_crank_bivariate(family, order);
        for (long m = -20; m <= 20; ++m) {
            const auto expected = family == bivariate::Family::C1 ? qseries::mc1_series(m, order, even)
                                                                  : qseries::mc5_series(m, order, even);
            const auto got = bivariate::extract_m(s, m);
            for (std::size_t n = 1; n <= order; ++n)
                mismatches += got[n] != expected[n];
        }
    }
    return {mismatches == 0, "C1 and C5, |m|<=20, n<=60: " + std::to_string(mismatches) + " mismatches"};
}

Outcome geometric_suite()
{
    using lattice::Region;
    std::int64_t checks = 0, failed = 0, near_ties = 0, not_applicable = 0;
    auto record = [&](const RealCheck& c) {
        ++checks;
        failed += !c.holds;
        near_ties += c.near_tie;
    };
    for (long m = 0; m <= 30; ++m)
        for (std::int64_t n = 2; n <= 3000; n += 2) {
            for (auto kind : {Region::Omega, Region::OmegaPrime}) {
                const lattice::RegionSpec spec{kind, m, n};
                const auto j = lattice::jarnik_check(spec);
                if (j.applicable)
                    record(j.check);
                else
                    ++not_applicable;
                record(lattice::parity_lemma(spec));
            }
            const double m1 = static_cast<double>(lattice::count_region({Region::Omega, m, n}).odd_y);
            const double m2 = static_cast<double>(lattice::count_region({Region::OmegaPrime, m, n}).odd_y);
            record(compare(m1, Relation::Less, lattice::m1_upper_bound(m, n)));
            record(compare(m2, Relation::Greater, lattice::m2_lower_bound(m, n)));
            record(compare(m2 - m1, Relation::Greater, bounds::theorem2_lower_bound(m, n)));
            record(bounds::m2_minus_m1_bound(m, n));
        }
    std::ostringstream s;
    s << checks << " inequalities, " << failed << " failed, " << near_ties << " near ties, " << not_applicable
      << " Jarnik cases outside the perimeter hypothesis";
    return {failed == 0 && near_ties == 0, s.str()};
}

Outcome threshold()
{
    const double f0_reference = 1221.84263180562605854;
    const double f0 = bounds::f_of_m(0), f120 = bounds::f_of_m(120), f121 = bounds::f_of_m(121);
    const double rel = std::abs(f0 - f0_reference) / f0_reference;
    std::ostringstream s;
    s.precision(12);
    s << "f(0)=" << f0 << " (rel err " << rel << "), f(120)=" << f120 << ", f(121)=" << f121;
    return {f120 > 2400 && f121 < 2420 && rel < 1e-6, s.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& tool)
{
    const std::string a = "acceptance_p1.json", b = "acceptance_p8.json";
    const std::string base = "\"" + tool + "\" verify --check all --json --out ";
    const int ra = std::system((base + a + " --parallel 1").c_str());
    const int rb = std::system((base + b + " --parallel 8").c_str());
    const auto ja = slurp(a), jb = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    const bool same = !ja.empty() && ja == jb;
    return {ra == 0 && rb == 0 && same, std::string(same ? "identical" : "different") + " JSON (" +
                                            std::to_string(ja.size()) + " bytes), exit codes " + std::to_string(ra) +
                                            "/" + std::to_string(rb)};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to sptcheck>\n";
        return 2;
    }

    criterion(1, "series, divisor and lattice paths agree for m<=20, n<=1000", 30, oracle_triangle);
    criterion(2, "X >= 0 on the window 20m < n < f(m), m<=120", 60,
              [] { return from_report(verify::verify_x_finite_window(1, 120)); });
    criterion(3, "truncated series equals X, decomposes, remainder nonnegative for m<=40", 30, [] {
        verify::SweepConfig cfg;
        cfg.m_max = 40;
        return from_report(verify::verify_x_small_n(cfg));
    });
    criterion(4, "M_C1, M_C5 >= 0 and symmetric for |m|<=50, n<=500", 20, [] {
        verify::SweepConfig cfg;
        cfg.m_max = 50;
        cfg.n_max = 500;
        return from_report(verify::verify_conjecture(cfg));
    });
    criterion(5, "bivariate expansion matches the univariate series", 20, bivariate_cross);
    criterion(6, "lattice inequalities on m<=30, even n<=3000", 60, geometric_suite);
    criterion(7, "threshold crossover between m=120 and m=121", 0, threshold);
    criterion(8, "verify --check all is byte-identical at parallelism 1 and 8", 0,
              [&] { return determinism(argv[1]); });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
