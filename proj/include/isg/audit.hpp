#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isg/edge_sum.hpp"
#include "isg/exact.hpp"
#include "isg/schemes.hpp"
#include "isg/sum_graph.hpp"

namespace isg {

/// Closed-form values asserted for one H instance.
struct Claims {
    std::optional<int> chi_prime;
    std::optional<int> zsum;
    std::optional<Perfection> perfect;
    std::string source;
};

/// Claims covering p, merged over every statement that mentions it.
std::optional<Claims> claims_for(const HParams& p);

struct Engines {
    bool edge_sum = true;
    bool paper = true;
    bool exact = true;
    bool greedy = false;

    /// Parses a comma-separated subset of {edge-sum, paper, exact, greedy}.
    static Engines parse(const std::string& list);
};

struct AuditOptions {
    Engines engines;
    SolverBudget budget;
};

enum class AuditStatus { Agree, Deviate, Unresolved };

const char* to_string(AuditStatus s);

struct AuditReport {
    std::string family;  // H2s, H3s, Hi2, Hi3, H, Grs or Gn
    int i = 0;           // -r for Grs
    int s = 0;           // n for Gn
    int m = 0;
    int j = 0;

    Coverage coverage = Coverage::Uncovered;
    std::string case_id;

    std::optional<int> claimed_chi;
    std::optional<int> computed_chi;
    std::optional<int> claimed_zsum;
    std::optional<int> computed_zsum;
    std::optional<Perfection> perfect_claimed;
    std::optional<Perfection> perfect_computed;

    std::optional<int> max_degree;
    std::optional<int> scheme_count;
    std::optional<bool> scheme_verified;
    std::optional<int> greedy_count;
    std::optional<ExactResult> exact;

    /// Number of individual comparisons made.
    int checks = 0;
    AuditStatus status = AuditStatus::Agree;
    std::vector<std::string> findings;
    /// Subset of findings that are deviations.
    std::vector<std::string> deviations;
};

AuditReport audit_h(const HParams& p, const AuditOptions& opts = {});

/// Edge-count and degree formulas against enumeration, plus any enabled
/// engines on the graph itself.
AuditReport audit_grs(int r, int s, const AuditOptions& opts = {});

/// G_n degree formula against enumeration.
AuditReport audit_gn(int n, const AuditOptions& opts = {});

/// One construction instantiated at one size and checked.
struct CaseAudit {
    std::string case_id;
    int size = 0;
    HParams params;
    int claimed_count = 0;
    int class_count = 0;
    VerificationReport report;
    /// Each violation mapped to the display line and k that produced it.
    std::vector<std::string> findings;

    [[nodiscard]] bool ok() const noexcept {
        return report.ok() && class_count == claimed_count;
    }
};

CaseAudit audit_case(const SchemeDescriptor& d, int size, Reading reading = Reading::Corrected);

/// Every catalog case at its first `sizes` sizes.
std::vector<CaseAudit> audit_constructions(int sizes = 4);

/// Verification of the explicit small-case listings.
struct ListingAudit {
    HParams params;
    bool in_domain = false;
    std::optional<VerificationReport> report;
    std::string detail;
};

std::vector<ListingAudit> audit_small_case_listings();

struct IntRange {
    int lo = 0;
    int hi = -1;
    [[nodiscard]] bool empty() const noexcept { return hi < lo; }
    /// "a:b" or "a".
    static IntRange parse(const std::string& text);
};

enum class SweepFamily { H2s, H3s, Hi2, Hi3, H, Grs, Gn };

const char* to_string(SweepFamily f);
std::optional<SweepFamily> sweep_family_from_string(const std::string& name);

struct SweepSpec {
    SweepFamily family = SweepFamily::H;
    IntRange i{1, 0};
    IntRange s{1, 0};
    IntRange m{1, 0};
    IntRange j{1, 0};
    IntRange r{1, 0};  // Grs
    IntRange n{1, 0};  // Gn
    AuditOptions options;
    unsigned threads = 1;
};

/// One report per valid instance, in ascending parameter order. Instances
/// outside the family or parameter domain are filtered out.
std::vector<AuditReport> run_sweep(const SweepSpec& spec);

/// Fixed-column audit CSV. First line is the schema comment.
inline constexpr const char* kAuditCsvSchema = "# isg-audit-csv v1";
std::string audit_csv_header();
std::string audit_csv_row(const AuditReport& r);
void write_audit_csv(std::ostream& out, const std::vector<AuditReport>& reports);

struct AuditSummary {
    int agree = 0;
    int deviate = 0;
    int unresolved = 0;
};

AuditSummary summarize(const std::vector<AuditReport>& reports);
std::string to_string(const AuditSummary& s);

}  // namespace isg
