#include "sptcrank/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sptcrank/bounds.hpp"
#include "sptcrank/divisors.hpp"
#include "sptcrank/lattice.hpp"
#include "sptcrank/qproducts.hpp"
#include "sptcrank/report.hpp"
#include "sptcrank/verifier.hpp"

namespace sptcrank::cli {

using nlohmann::ordered_json;

namespace {

enum class Format { Text, Csv, Json };

struct CommonOptions {
    bool csv = false;
    bool json = false;
    std::string out_path;
    unsigned parallel = 1;
    bool override_guard = false;
    bool timing = false;
    bool verbose = false;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

void add_common(CLI::App* app, CommonOptions& o)
{
    auto* csv = app->add_flag("--csv", o.csv, "CSV output (check,m,n,value,expected)")->envname("SPTCHECK_CSV");
    app->add_flag("--json", o.json, "JSON output")->envname("SPTCHECK_JSON")->excludes(csv);
    app->add_option("--out", o.out_path, "write output to PATH instead of stdout")->envname("SPTCHECK_OUT");
    app->add_option("--parallel", o.parallel, "worker threads for sweeps")
        ->envname("SPTCHECK_PARALLEL")
        ->check(CLI::PositiveNumber);
    app->add_flag("--override-resource-guard", o.override_guard, "run configurations above the slot limit")
        ->envname("SPTCHECK_OVERRIDE_RESOURCE_GUARD");
    app->add_flag("--timing", o.timing, "include elapsed times in JSON")->envname("SPTCHECK_TIMING");
    app->add_flag("--verbose", o.verbose, "print notes and skipped cases")->envname("SPTCHECK_VERBOSE");
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

void emit_json(std::ostream& out, const ordered_json& doc)
{
    out << doc.dump(2) << '\n';
}

int exit_for(const std::vector<verify::VerificationReport>& reports)
{
    for (const auto& r : reports)
        if (r.status == verify::Status::Fail)
            return Failure;
    return Pass;
}

void emit_reports(std::ostream& out, const CommonOptions& o, const ordered_json& config,
                  const std::vector<verify::VerificationReport>& reports)
{
    switch (o.format()) {
    case Format::Json: emit_json(out, report::report_document(config, reports, o.timing)); break;
    case Format::Csv: report::write_csv(out, report::report_records(reports)); break;
    case Format::Text: report::write_text(out, reports, o.verbose); break;
    }
}

ordered_json checks_json(const std::vector<verify::CheckId>& checks)
{
    ordered_json a = ordered_json::array();
    for (auto id : checks)
        a.push_back(verify::check_name(id));
    return a;
}

// ---------------------------------------------------------------------------

struct CoeffArgs {
    std::string family = "x";
    long m = 0;
    std::int64_t n_min = 1;
    std::int64_t n_max = 20;
};

int run_coeff(std::ostream& out, const CommonOptions& o, const CoeffArgs& a)
{
    const auto tag = qseries::parse_tag(a.family);
    if (a.n_min < 0 || a.n_max < a.n_min)
        throw std::invalid_argument("need 0 <= n-min <= n-max");
    if (!o.override_guard && static_cast<std::uint64_t>(a.n_max) > verify::resource_guard_slots)
        throw verify::ResourceGuardError("n-max exceeds the coefficient slot limit");

    const auto s = qseries::build({tag, a.m}, static_cast<std::size_t>(a.n_max));
    const std::string name(qseries::tag_name(tag));
    switch (o.format()) {
    case Format::Json: {
        ordered_json rows = ordered_json::array();
        for (auto n = a.n_min; n <= a.n_max; ++n)
            rows.push_back({{"m", str(a.m)}, {"n", str(n)}, {"value", s[n].get_str()}});
        ordered_json config = {{"command", "coeff"}, {"family", name}, {"m", str(a.m)},
                               {"nMin", str(a.n_min)}, {"nMax", str(a.n_max)}};
        emit_json(out, report::envelope(config, "coefficients", std::move(rows)));
        break;
    }
    case Format::Csv: {
        std::vector<report::OutputRecord> rows;
        for (auto n = a.n_min; n <= a.n_max; ++n)
            rows.push_back({report::OutputRecord::Kind::Coefficient, name, str(a.m), str(n), s[n].get_str(), ""});
        report::write_csv(out, rows);
        break;
    }
    case Format::Text:
        out << "# " << name << "  m n value\n";
        for (auto n = a.n_min; n <= a.n_max; ++n)
            out << a.m << ' ' << n << ' ' << s[n].get_str() << '\n';
        break;
    }
    return Pass;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string check = "all";
    long m_max = 20;
    std::int64_t n_max = 1000;
    std::size_t bivariate_order = 60;
};

verify::SweepConfig sweep_config(const CommonOptions& o, const SweepArgs& a)
{
    verify::SweepConfig cfg;
    cfg.m_max = a.m_max;
    cfg.n_max = a.n_max;
    cfg.parallelism = o.parallel;
    cfg.bivariate_order = a.bivariate_order;
    cfg.override_resource_guard = o.override_guard;
    if (a.check != "all") {
        auto id = verify::parse_check(a.check);
        if (!id)
            throw std::invalid_argument("unknown check '" + a.check + "'");
        cfg.checks = {*id};
    }
    return cfg;
}

ordered_json sweep_config_json(const char* command, const verify::SweepConfig& cfg)
{
    return {{"command", command},
            {"checks", checks_json(cfg.checks)},
            {"mMax", str(cfg.m_max)},
            {"nMax", str(cfg.n_max)},
            {"bivariateOrder", str(static_cast<std::int64_t>(cfg.bivariate_order))}};
}

int run_verify(std::ostream& out, const CommonOptions& o, const SweepArgs& a, const char* command)
{
    const auto cfg = sweep_config(o, a);
    verify::validate(cfg);
    const auto reports = verify::verify_all(cfg);
    emit_reports(out, o, sweep_config_json(command, cfg), reports);
    return exit_for(reports);
}

int run_finite_window(std::ostream& out, const CommonOptions& o, long m_max)
{
    if (m_max < 0)
        throw std::invalid_argument("m-max must be nonnegative");
    const auto reports = std::vector{verify::verify_x_finite_window(o.parallel, m_max)};
    ordered_json config = {{"command", "finite-window"}, {"mMax", str(m_max)}};
    emit_reports(out, o, config, reports);
    if (o.format() == Format::Text)
        out << m_max + 1 << " values of m, " << reports.front().violation_count << " violations\n";
    return exit_for(reports);
}

// ---------------------------------------------------------------------------

ordered_json region_json(const lattice::RegionSpec& spec)
{
    const auto count = lattice::count_region(spec);
    ordered_json j = {{"total", str(count.total)}, {"oddY", str(count.odd_y)}};
    try {
        const auto g = lattice::geometry_figures(spec);
        j["area"] = format_real(g.area);
        j["lengthBound"] = format_real(g.length_bound);
        j["xExtent"] = format_real(g.x_extent);
        j["xExtentBound"] = format_real(g.x_extent_bound);
        j["chordPerimeter"] = format_real(g.chord_perimeter);
        const auto jarnik = lattice::jarnik_check(spec);
        j["jarnik"] = jarnik.applicable ? jarnik.check.describe() : "not applicable (perimeter < 1)";
        j["parity"] = lattice::parity_lemma(spec).describe();
    } catch (const std::domain_error& e) {
        j["geometry"] = std::string("unavailable: ") + e.what();
    }
    return j;
}

int run_lattice(std::ostream& out, const CommonOptions& o, long m, std::int64_t n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("lattice needs m >= 0 and n >= 0");
    const lattice::RegionSpec omega{lattice::Region::Omega, m, n};
    const lattice::RegionSpec omega_prime{lattice::Region::OmegaPrime, m, n};
    ordered_json j = {{"omega", region_json(omega)}, {"omegaPrime", region_json(omega_prime)}};
    const std::int64_t m1 = lattice::count_region(omega).odd_y;
    const std::int64_t m2 = lattice::count_region(omega_prime).odd_y;
    j["m1"] = str(m1);
    j["m2"] = str(m2);
    j["m2MinusM1"] = str(m2 - m1);
    if (n >= 2 && n % 2 == 0) {
        j["m1UpperBound"] = format_real(lattice::m1_upper_bound(m, n));
        j["m2LowerBound"] = format_real(lattice::m2_lower_bound(m, n));
        j["lowerBound"] = format_real(bounds::theorem2_lower_bound(m, n));
        j["combinedBound"] = bounds::m2_minus_m1_bound(m, n).describe();
    }

    switch (o.format()) {
    case Format::Json:
        emit_json(out, report::envelope({{"command", "lattice"}, {"m", str(m)}, {"n", str(n)}}, "lattice", j));
        break;
    case Format::Csv: {
        std::vector<report::OutputRecord> rows;
        for (const char* region : {"omega", "omegaPrime"})
            for (const auto& [key, value] : j[region].items())
                rows.push_back({report::OutputRecord::Kind::Coefficient, std::string(region) + "." + key, str(m),
                                str(n), value.get<std::string>(), ""});
        for (const auto& [key, value] : j.items())
            if (value.is_string())
                rows.push_back(
                    {report::OutputRecord::Kind::Coefficient, key, str(m), str(n), value.get<std::string>(), ""});
        report::write_csv(out, rows);
        break;
    }
    case Format::Text:
        out << "m=" << m << " n=" << n << '\n';
        for (const char* region : {"omega", "omegaPrime"}) {
            out << region << ":\n";
            for (const auto& [key, value] : j[region].items())
                out << "  " << key << ": " << value.get<std::string>() << '\n';
        }
        for (const auto& [key, value] : j.items())
            if (value.is_string())
                out << key << ": " << value.get<std::string>() << '\n';
        break;
    }
    return Pass;
}

int run_bounds(std::ostream& out, const CommonOptions& o, long m_max)
{
    if (m_max < 0)
        throw std::invalid_argument("m-max must be nonnegative");
    const auto table = bounds::threshold_table(m_max);
    switch (o.format()) {
    case Format::Json: {
        ordered_json rows = ordered_json::array();
        for (const auto& p : table)
            rows.push_back({{"m", str(p.m)},
                            {"f", format_real(p.f_value)},
                            {"twentyM", str(p.twenty_m)},
                            {"fExceeds20m", p.f_exceeds_20m},
                            {"nearTie", p.near_tie}});
        emit_json(out, report::envelope({{"command", "bounds"}, {"mMax", str(m_max)}}, "thresholds", rows));
        break;
    }
    case Format::Csv: {
        std::vector<report::OutputRecord> rows;
        for (const auto& p : table)
            rows.push_back({report::OutputRecord::Kind::Coefficient, "f", str(p.m), "", format_real(p.f_value),
                            (p.f_exceeds_20m ? ">" : "<=") + str(p.twenty_m)});
        report::write_csv(out, rows);
        break;
    }
    case Format::Text:
        out << "#   m  f(m)                  20m  f(m)>20m\n";
        for (const auto& p : table) {
            std::ostringstream line;
            line << std::setw(5) << p.m << "  " << std::left << std::setw(20) << format_real(p.f_value) << std::right
                 << std::setw(6) << p.twenty_m << "  " << (p.f_exceeds_20m ? "yes" : "no")
                 << (p.near_tie ? " (near tie)" : "");
            out << line.str() << '\n';
        }
        break;
    }
    return Pass;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Checks on spt-crank type coefficients, their lattice-point and divisor models.", "sptcheck"};
    app.set_version_flag("--version", SPTCRANK_VERSION);
    app.require_subcommand(1);

    CommonOptions common;

    CoeffArgs coeff_args;
    auto* coeff = app.add_subcommand("coeff", "print coefficients of one generating function");
    coeff->add_option("--family", coeff_args.family, "mc1, mc5, x, y, z, t, r2, ...")->required();
    coeff->add_option("--m", coeff_args.m, "shift m");
    coeff->add_option("--n-min", coeff_args.n_min, "first n (default 1)");
    coeff->add_option("--n-max", coeff_args.n_max, "last n")->required();
    add_common(coeff, common);

    SweepArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a named check or all of them");
    verify_cmd->add_option("--check", verify_args.check, "y-nonneg, x-small-n, finite-window, conjecture, cross-check or all");
    verify_cmd->add_option("--m-max", verify_args.m_max, "largest m (default 20)");
    verify_cmd->add_option("--n-max", verify_args.n_max, "largest n (default 1000)");
    verify_cmd->add_option("--bivariate-order", verify_args.bivariate_order, "truncation of the bivariate leg");
    add_common(verify_cmd, common);

    SweepArgs cross_args;
    auto* cross = app.add_subcommand("cross-check", "series, divisor and lattice paths against each other");
    cross->add_option("--m-max", cross_args.m_max, "largest m (default 20)");
    cross->add_option("--n-max", cross_args.n_max, "largest n (default 1000)");
    cross->add_option("--bivariate-order", cross_args.bivariate_order, "truncation of the bivariate leg");
    add_common(cross, common);

    long window_m_max = 120;
    auto* window = app.add_subcommand("finite-window", "X(m, n) >= 0 for 20m < n < f(m)");
    window->add_option("--m-max", window_m_max, "largest m (default 120)");
    add_common(window, common);

    long lattice_m = 0;
    std::int64_t lattice_n = 0;
    auto* lattice_cmd = app.add_subcommand("lattice", "region counts and geometry for one (m, n)");
    lattice_cmd->add_option("--m", lattice_m)->required();
    lattice_cmd->add_option("--n", lattice_n)->required();
    add_common(lattice_cmd, common);

    long bounds_m_max = 130;
    auto* bounds_cmd = app.add_subcommand("bounds", "f(m) against 20m");
    bounds_cmd->add_option("--m-max", bounds_m_max, "largest m (default 130)");
    add_common(bounds_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream text, errors;
        const int code = app.exit(e, text, errors);
        out << text.str();
        err << errors.str();
        return code == 0 ? Pass : Usage;
    }

    std::ofstream file;
    if (!common.out_path.empty()) {
        file.open(common.out_path, std::ios::binary);
        if (!file) {
            err << "sptcheck: cannot open " << common.out_path << " for writing\n";
            return Usage;
        }
    }
    std::ostream& sink = common.out_path.empty() ? out : file;

    try {
        if (coeff->parsed())
            return run_coeff(sink, common, coeff_args);
        if (verify_cmd->parsed())
            return run_verify(sink, common, verify_args, "verify");
        if (cross->parsed()) {
            cross_args.check = "cross-check";
            return run_verify(sink, common, cross_args, "cross-check");
        }
        if (window->parsed())
            return run_finite_window(sink, common, window_m_max);
        if (lattice_cmd->parsed())
            return run_lattice(sink, common, lattice_m, lattice_n);
        if (bounds_cmd->parsed())
            return run_bounds(sink, common, bounds_m_max);
    } catch (const verify::ResourceGuardError& e) {
        err << "sptcheck: " << e.what() << '\n';
        return ResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "sptcheck: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace sptcrank::cli
