#include "sptcrank/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>
#include <tuple>

#include "sptcrank/bivariate.hpp"
#include "sptcrank/bounds.hpp"
#include "sptcrank/lattice.hpp"

namespace sptcrank::verify {

namespace {

using Clock = std::chrono::steady_clock;

/// Findings of one unit of work (usually one m).
struct Findings {
    std::vector<Violation> violations;
    std::vector<SkipEntry> skips;
    std::vector<std::string> notes;

    void violation(long m, std::int64_t n, std::string value, std::string expected)
    {
        violations.push_back({m, n, std::move(value), std::move(expected)});
    }

    void real_check(long m, std::int64_t n, const RealCheck& c, const std::string& what)
    {
        if (!c.holds)
            violation(m, n, c.describe(), what);
        else if (c.near_tie)
            violation(m, n, c.describe(), what + " (near tie)");
    }
};

/// Runs task(i) for i in [0, count) on up to `threads` workers and returns the results by index.
template <typename Task>
std::vector<Findings> run_parallel(std::size_t count, unsigned threads, Task task)
{
    std::vector<Findings> results(count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = task(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        results[i] = task(i);
                    } catch (...) {
                        if (!failed.exchange(true))
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

VerificationReport assemble(std::string_view check, RangeDescriptor range, std::vector<Findings> parts,
                            Clock::time_point started)
{
    VerificationReport r;
    r.check_id = std::string(check);
    r.range = std::move(range);

    std::vector<Violation> violations;
    for (auto& p : parts) {
        violations.insert(violations.end(), std::make_move_iterator(p.violations.begin()),
                          std::make_move_iterator(p.violations.end()));
        for (auto& s : p.skips) {
            ++r.skipped_count;
            if (r.skipped.size() < violation_cap)
                r.skipped.push_back(std::move(s));
        }
        r.notes.insert(r.notes.end(), p.notes.begin(), p.notes.end());
    }
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });
    std::stable_sort(r.skipped.begin(), r.skipped.end(),
                     [](const SkipEntry& a, const SkipEntry& b) { return std::tie(a.m, a.n) < std::tie(b.m, b.n); });

    r.violation_count = violations.size();
    if (violations.size() > violation_cap)
        violations.resize(violation_cap);
    r.violations = std::move(violations);
    r.status = r.violations.empty() ? Status::Pass : Status::Fail;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return r;
}

std::string str(const Integer& v)
{
    return to_decimal(v);
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

std::string census_text(const divisors::DivisorPairCensus& c)
{
    return "a1=" + str(c.a1) + " a2=" + str(c.a2) + " b1=" + str(c.b1) + " b2=" + str(c.b2) +
           " e=" + std::to_string(c.decomposition.e);
}

std::size_t as_order(std::int64_t n)
{
    return static_cast<std::size_t>(std::max<std::int64_t>(n, 0));
}

} // namespace

std::string_view check_name(CheckId id)
{
    switch (id) {
    case CheckId::YNonneg: return "y-nonneg";
    case CheckId::XSmallN: return "x-small-n";
    case CheckId::FiniteWindow: return "finite-window";
    case CheckId::Conjecture: return "conjecture";
    case CheckId::CrossCheck: return "cross-check";
    }
    return "?";
}

std::optional<CheckId> parse_check(std::string_view name)
{
    for (CheckId id : all_checks)
        if (check_name(id) == name)
            return id;
    return std::nullopt;
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

std::uint64_t estimated_slots(const SweepConfig& cfg)
{
    const std::uint64_t ms = static_cast<std::uint64_t>(std::max<long>(cfg.m_max, 0)) + 1;
    const std::uint64_t ns = static_cast<std::uint64_t>(std::max<std::int64_t>(cfg.n_max, 0)) + 1;
    std::uint64_t total = 0;
    for (CheckId id : cfg.checks) {
        switch (id) {
        case CheckId::YNonneg: total += ms * ns; break;
        case CheckId::XSmallN: total += 10 * ms * ms + 21 * ms; break;
        case CheckId::FiniteWindow: total += 121 * 2401; break;
        case CheckId::Conjecture: total += 4 * ms * ns; break;
        case CheckId::CrossCheck: {
            const std::uint64_t b = std::min<std::uint64_t>(cfg.bivariate_order, ns) + 1;
            total += 3 * ms * ns + 2 * b * (2 * b + 1);
            break;
        }
        }
    }
    return total;
}

void validate(const SweepConfig& cfg)
{
    if (cfg.m_max < 0 || cfg.n_max < 0)
        throw std::invalid_argument("m_max and n_max must be nonnegative");
    if (cfg.parallelism == 0)
        throw std::invalid_argument("parallelism must be positive");
    if (!cfg.override_resource_guard && estimated_slots(cfg) > resource_guard_slots)
        throw ResourceGuardError("configuration implies " + std::to_string(estimated_slots(cfg)) +
                                 " coefficient slots (limit " + std::to_string(resource_guard_slots) +
                                 "); pass the resource-guard override to run it anyway");
}

VerificationReport verify_y_nonneg(const SweepConfig& cfg, const CensusFn& census)
{
    validate(cfg);
    const auto started = Clock::now();
    const CensusFn count = census ? census : CensusFn([](long m, std::int64_t n) { return divisors::census(m, n); });

    auto parts = run_parallel(static_cast<std::size_t>(cfg.m_max) + 1, cfg.parallelism, [&](std::size_t i) {
        const long m = static_cast<long>(i);
        Findings f;
        for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
            const auto c = count(m, n);
            if (!c.containments_hold())
                f.violation(m, n, census_text(c), "census containments");
            const std::int64_t y = c.a1 + c.b1 - c.a2 - c.b2;
            if (y < 0)
                f.violation(m, n, str(y), "Y >= 0");
        }
        return f;
    });
    if (cfg.n_max < 1)
        parts.front().notes.push_back("empty range: no n with 1 <= n <= n_max");
    return assemble(check_name(CheckId::YNonneg), {0, cfg.m_max, 1, cfg.n_max, "0<=m<=mMax, 1<=n<=nMax"},
                    std::move(parts), started);
}

VerificationReport verify_x_finite_window(unsigned parallelism, long m_max)
{
    if (m_max < 0 || parallelism == 0)
        throw std::invalid_argument("finite window: m_max must be nonnegative and parallelism positive");
    const auto started = Clock::now();
    // (ln2/4)u^2 - 6u - (m+2) is increasing for u >= 12/ln2
    const double vertex_np1 = std::pow(12.0 / std::numbers::ln2, 2);

    auto parts = run_parallel(static_cast<std::size_t>(m_max) + 1, parallelism, [&](std::size_t i) {
        const long m = static_cast<long>(i);
        Findings f;
        const double f_value = bounds::f_of_m(m);
        const auto upper = static_cast<std::int64_t>(std::ceil(f_value));
        const std::int64_t lower = 20 * static_cast<std::int64_t>(m);

        const auto x = qseries::x_series(m, as_order(upper));
        std::int64_t checked = 0;
        for (std::int64_t n = lower + 1; n <= upper && static_cast<double>(n) < f_value; ++n) {
            ++checked;
            if (sgn(x[static_cast<std::size_t>(n)]) < 0)
                f.violation(m, n, str(x[static_cast<std::size_t>(n)]), "X >= 0");
        }

        // n >= f(m): the lower bound is nonnegative at the first even n and increasing after it
        const std::int64_t first_even = upper + (upper % 2);
        const double bound = bounds::theorem2_lower_bound(m, first_even);
        if (bound < 0 || static_cast<double>(first_even + 1) < vertex_np1)
            f.violation(m, first_even, format_real(bound), "lower bound >= 0 for all even n >= f(m)");

        f.notes.push_back("m=" + std::to_string(m) + ": f(m)=" + format_real(f_value) + ", " +
                          std::to_string(checked) + " values in window");
        return f;
    });
    return assemble(check_name(CheckId::FiniteWindow), {0, m_max, 0, 0, "0<=m<=mMax, 20m<n<f(m)"}, std::move(parts),
                    started);
}

VerificationReport verify_x_small_n(const SweepConfig& cfg, const qseries::TDecomposition& d)
{
    validate(cfg);
    const auto started = Clock::now();
    using namespace qseries;

    auto parts = run_parallel(static_cast<std::size_t>(cfg.m_max), cfg.parallelism, [&](std::size_t i) {
        const long m = static_cast<long>(i) + 1;
        const std::size_t order = 20 * static_cast<std::size_t>(m);
        Findings f;

        const auto t = t_series(m, order);
        const auto x = x_series(m, order);
        const auto sum = t_component(d.t1, m, order) + t_component(d.t3, m, order) + t_component(d.t5, m, order) +
                         t_component(d.t7, m, order) + t_component(d.t9, m, order) +
                         t_component(d.tprime, m, order);
        const auto r2 = r2_series(m, order, d);

        auto brackets = TruncatedSeries(order);
        for (const auto& b : t_bracket_pairs(m)) {
            const auto s = t_bracket_series(b, order);
            if (!(b.first < b.second) || !s.has_nonnegative_coeffs())
                f.violation(m, static_cast<std::int64_t>(b.first), std::to_string(b.first) + "," + std::to_string(b.second),
                            "bracket q^a - q^b with a < b");
            brackets = brackets + s;
        }
        const auto rearranged = brackets + r2;

        for (std::size_t n = 0; n <= order; ++n) {
            const auto nn = static_cast<std::int64_t>(n);
            if (t[n] != x[n])
                f.violation(m, nn, str(t[n]), "T == X (" + str(x[n]) + ")");
            if (sum[n] != t[n])
                f.violation(m, nn, str(sum[n]), "T1+T3+T5+T7+T9+T' == T (" + str(t[n]) + ")");
            if (rearranged[n] != t[n])
                f.violation(m, nn, str(rearranged[n]), "brackets + R2 == T (" + str(t[n]) + ")");
            if (sgn(r2[n]) < 0)
                f.violation(m, nn, str(r2[n]), "R2 >= 0");
            if (sgn(x[n]) < 0)
                f.violation(m, nn, str(x[n]), "X >= 0");
        }
        return f;
    });
    if (cfg.m_max < 1) {
        parts.emplace_back();
        parts.back().notes.push_back("vacuous: m = 0 leaves only n <= 0");
    }
    return assemble(check_name(CheckId::XSmallN), {1, cfg.m_max, 0, 20 * static_cast<std::int64_t>(cfg.m_max), "1<=m<=mMax, 0<=n<=20m"},
                    std::move(parts), started);
}

VerificationReport verify_conjecture(const SweepConfig& cfg)
{
    validate(cfg);
    const auto started = Clock::now();
    const std::size_t order = as_order(cfg.n_max);
    const auto even = qseries::even_partition_series(order);

    auto parts = run_parallel(static_cast<std::size_t>(cfg.m_max) + 1, cfg.parallelism, [&](std::size_t i) {
        const long m = static_cast<long>(i);
        Findings f;
        const auto c1 = qseries::mc1_series(m, order, even);
        const auto c5 = qseries::mc5_series(m, order, even);
        const auto c1_neg = qseries::mc1_series(-m, order, even);
        const auto c5_neg = qseries::mc5_series(-m, order, even);
        for (std::size_t n = 1; n <= order; ++n) {
            const auto nn = static_cast<std::int64_t>(n);
            if (sgn(c1[n]) < 0)
                f.violation(m, nn, str(c1[n]), "M_C1 >= 0");
            if (sgn(c5[n]) < 0)
                f.violation(m, nn, str(c5[n]), "M_C5 >= 0");
            if (c1_neg[n] != c1[n])
                f.violation(m, nn, str(c1_neg[n]), "M_C1(-m,n) == M_C1(m,n) (" + str(c1[n]) + ")");
            if (c5_neg[n] != c5[n])
                f.violation(m, nn, str(c5_neg[n]), "M_C5(-m,n) == M_C5(m,n) (" + str(c5[n]) + ")");
        }
        return f;
    });
    return assemble(check_name(CheckId::Conjecture), {-cfg.m_max, cfg.m_max, 1, cfg.n_max, "|m|<=mMax, 1<=n<=nMax"},
                    std::move(parts), started);
}

namespace {

Findings cross_check_m(long m, std::int64_t n_max)
{
    using lattice::Region;
    Findings f;
    const std::size_t order = as_order(n_max);
    const auto y = qseries::y_series(m, order);
    const auto z = qseries::z_series(m, order);
    const auto x = qseries::x_series(m, order);

    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto k = static_cast<std::size_t>(n);
        const std::int64_t yd = divisors::y_direct(m, n);
        const std::int64_t zd = divisors::z_direct(m, n);
        const std::int64_t xd = divisors::x_direct(m, n);
        if (y[k] != yd)
            f.violation(m, n, str(y[k]), "Y series == divisor path (" + str(yd) + ")");
        if (z[k] != zd)
            f.violation(m, n, str(z[k]), "Z series == divisor path (" + str(zd) + ")");
        if (x[k] != xd)
            f.violation(m, n, str(x[k]), std::string(n % 2 ? "X series == odd Z sum (" : "X series == M2 - M1 (") +
                                             str(xd) + ")");
        if (zd < 0)
            f.violation(m, n, str(zd), "Z >= 0");

        if (n % 2 != 0 || n < 2)
            continue;

        const lattice::RegionSpec omega{Region::Omega, m, n};
        const lattice::RegionSpec omega_prime{Region::OmegaPrime, m, n};
        for (const auto& spec : {omega, omega_prime}) {
            const char* name = spec.kind == Region::Omega ? "Omega" : "Omega'";
            const auto jarnik = lattice::jarnik_check(spec);
            if (!jarnik.applicable)
                f.skips.push_back({m, n, std::string("Jarnik on ") + name + ": chord perimeter < 1"});
            else
                f.real_check(m, n, jarnik.check, std::string("Jarnik |N - A| < l on ") + name);
            f.real_check(m, n, lattice::parity_lemma(spec), std::string("parity |N/2 - M| <= extent + 1 on ") + name);
        }

        const auto m1 = lattice::count_region(omega).odd_y;
        const auto m2 = lattice::count_region(omega_prime).odd_y;
        f.real_check(m, n, compare(static_cast<double>(m1), Relation::Less, lattice::m1_upper_bound(m, n)),
                     "M1 upper bound");
        f.real_check(m, n, compare(static_cast<double>(m2), Relation::Greater, lattice::m2_lower_bound(m, n)),
                     "M2 lower bound");
        f.real_check(m, n, compare(static_cast<double>(xd), Relation::Greater, bounds::theorem2_lower_bound(m, n)),
                     "X > (ln2/4)(n+1) - 6 sqrt(n+1) - m - 2");
        f.real_check(m, n, bounds::m2_minus_m1_bound(m, n), "M2 bound - M1 bound >= combined lower bound");
    }
    return f;
}

Findings cross_check_bivariate(bivariate::Family family, std::size_t order, long m_max)
{
    Findings f;
    const auto s = bivariate::spt_crank_bivariate(family, order);
    const auto even = qseries::even_partition_series(order);
    const long bound = std::min<long>(m_max, static_cast<long>(order));
    const std::string name(bivariate::family_name(family));
    for (long m = -bound; m <= bound; ++m) {
        const auto extracted = bivariate::extract_m(s, m);
        const auto mirrored = bivariate::extract_m(s, -m);
        const auto expected = family == bivariate::Family::C1 ? qseries::mc1_series(m, order, even)
                                                              : qseries::mc5_series(m, order, even);
        for (std::size_t n = 1; n <= order; ++n) {
            const auto nn = static_cast<std::int64_t>(n);
            if (extracted[n] != expected[n])
                f.violation(m, nn, str(extracted[n]), name + " bivariate == univariate (" + str(expected[n]) + ")");
            if (extracted[n] != mirrored[n])
                f.violation(m, nn, str(extracted[n]), name + " z <-> 1/z symmetry (" + str(mirrored[n]) + ")");
        }
    }
    f.notes.push_back(name + " bivariate expansion compared for |m| <= " + std::to_string(bound) + ", n <= " +
                      std::to_string(order));
    return f;
}

/// z <-> 1/z symmetry for all eight families, and a count of negative coefficients for the
/// families the conjecture does not cover. The counts are notes, never violations.
constexpr std::size_t survey_order = 30;

Findings bivariate_survey(std::size_t order)
{
    Findings f;
    for (auto family : bivariate::all_families) {
        const auto s = bivariate::spt_crank_bivariate(family, order);
        const std::string name(bivariate::family_name(family));
        std::uint64_t negative = 0;
        for (std::size_t n = 1; n <= order; ++n) {
            const auto& poly = s[n];
            for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
                const long d = poly.min_degree + static_cast<long>(i);
                if (poly.coeffs[i] != poly.coeff(-d))
                    f.violation(d, static_cast<std::int64_t>(n), str(poly.coeffs[i]),
                                name + " z <-> 1/z symmetry (" + str(poly.coeff(-d)) + ")");
                if (sgn(poly.coeffs[i]) < 0)
                    ++negative;
            }
        }
        if (family != bivariate::Family::C1 && family != bivariate::Family::C5)
            f.notes.push_back(name + ": " + std::to_string(negative) + " negative coefficients for n <= " +
                              std::to_string(order));
    }
    return f;
}

} // namespace

VerificationReport cross_check(const SweepConfig& cfg)
{
    validate(cfg);
    const auto started = Clock::now();
    const std::size_t m_tasks = static_cast<std::size_t>(cfg.m_max) + 1;
    const std::size_t biv_order = std::min<std::size_t>(cfg.bivariate_order, as_order(cfg.n_max));

    // tasks 0 and 1 are the bivariate C1 and C5 legs, task 2 the eight-family survey, the rest one per m
    const std::size_t biv_tasks = biv_order >= 1 ? 3 : 0;
    auto parts = run_parallel(biv_tasks + m_tasks, cfg.parallelism, [&](std::size_t i) {
        if (i == 2)
            return bivariate_survey(std::min<std::size_t>(biv_order, survey_order));
        if (i < biv_tasks)
            return cross_check_bivariate(i == 0 ? bivariate::Family::C1 : bivariate::Family::C5, biv_order, cfg.m_max);
        return cross_check_m(static_cast<long>(i - biv_tasks), cfg.n_max);
    });
    return assemble(check_name(CheckId::CrossCheck), {0, cfg.m_max, 1, cfg.n_max, "0<=m<=mMax, 1<=n<=nMax"},
                    std::move(parts), started);
}

std::vector<VerificationReport> verify_all(const SweepConfig& cfg)
{
    validate(cfg);
    std::vector<VerificationReport> reports;
    for (CheckId id : all_checks) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), id) == cfg.checks.end())
            continue;
        switch (id) {
        case CheckId::YNonneg: reports.push_back(verify_y_nonneg(cfg)); break;
        case CheckId::XSmallN: reports.push_back(verify_x_small_n(cfg)); break;
        case CheckId::FiniteWindow: reports.push_back(verify_x_finite_window(cfg.parallelism)); break;
        case CheckId::Conjecture: reports.push_back(verify_conjecture(cfg)); break;
        case CheckId::CrossCheck: reports.push_back(cross_check(cfg)); break;
        }
    }
    return reports;
}

} // namespace sptcrank::verify
