#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sptcrank/divisors.hpp"
#include "sptcrank/qproducts.hpp"

namespace sptcrank::verify {

enum class CheckId { YNonneg, XSmallN, FiniteWindow, Conjecture, CrossCheck };

inline constexpr CheckId all_checks[] = {CheckId::YNonneg, CheckId::XSmallN, CheckId::FiniteWindow,
                                         CheckId::Conjecture, CheckId::CrossCheck};

std::string_view check_name(CheckId id);

/// Accepts "y-nonneg", "x-small-n", "finite-window", "conjecture", "cross-check".
std::optional<CheckId> parse_check(std::string_view name);

/// Configurations implying more coefficient slots than this are refused unless overridden.
inline constexpr std::uint64_t resource_guard_slots = 100'000'000;

/// Violations kept per report; the total is still counted.
inline constexpr std::size_t violation_cap = 1000;

struct SweepConfig {
    long m_max = 20;
    std::int64_t n_max = 1000;
    std::vector<CheckId> checks{std::begin(all_checks), std::end(all_checks)};
    unsigned parallelism = 1;
    /// Truncation order of the bivariate leg of cross_check (capped by n_max).
    std::size_t bivariate_order = 60;
    bool override_resource_guard = false;
};

class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument for negative ranges or zero parallelism and
/// ResourceGuardError when the slot estimate exceeds the guard without override.
void validate(const SweepConfig& cfg);

/// Rough count of coefficients the selected checks materialize.
std::uint64_t estimated_slots(const SweepConfig& cfg);

struct Violation {
    long m = 0;
    std::int64_t n = 0;
    std::string value;
    std::string expected;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SkipEntry {
    long m = 0;
    std::int64_t n = 0;
    std::string reason;
};

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

struct RangeDescriptor {
    long m_min = 0;
    long m_max = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::string description;
};

struct VerificationReport {
    std::string check_id;
    RangeDescriptor range;
    Status status = Status::Pass;
    /// Sorted by (m, n); at most violation_cap entries.
    std::vector<Violation> violations;
    std::uint64_t violation_count = 0;
    std::vector<SkipEntry> skipped;
    std::uint64_t skipped_count = 0;
    std::vector<std::string> notes;
    double elapsed_ms = 0;
    std::string tool_version = SPTCRANK_VERSION;
};

using CensusFn = std::function<divisors::DivisorPairCensus(long m, std::int64_t n)>;

/// y_direct(m, n) >= 0 and the census containments for 0 <= m <= m_max, 1 <= n <= n_max.
VerificationReport verify_y_nonneg(const SweepConfig& cfg, const CensusFn& census = {});

/// X^(m)(n) >= 0 for 0 <= m <= m_max and 20m < n < f(m), one x_series build per m,
/// plus the per-m check that n <= 20m, the window and n >= f(m) tile all n.
VerificationReport verify_x_finite_window(unsigned parallelism = 1, long m_max = 120);

/// For 1 <= m <= m_max and n <= 20m: T = X, T = T1+T3+T5+T7+T9+T', the ten brackets and R2 are
/// nonnegative, T = brackets + R2, hence X >= 0.
VerificationReport verify_x_small_n(const SweepConfig& cfg,
                                    const qseries::TDecomposition& decomposition = qseries::standard_t_decomposition());

/// M_C1(m, n) >= 0 and M_C5(m, n) >= 0 for |m| <= m_max, 1 <= n <= n_max, with m <-> -m symmetry.
VerificationReport verify_conjecture(const SweepConfig& cfg);

/// Series vs divisor vs lattice for X, Y, Z; bivariate vs univariate for C1, C5; Jarnik,
/// parity, M1/M2 bounds and the combined lower bound on even n. Also checks z <-> 1/z
/// symmetry of all eight bivariate families and notes their negative coefficients.
VerificationReport cross_check(const SweepConfig& cfg);

/// The checks selected in cfg.checks, in the canonical order of all_checks.
std::vector<VerificationReport> verify_all(const SweepConfig& cfg);

} // namespace sptcrank::verify
