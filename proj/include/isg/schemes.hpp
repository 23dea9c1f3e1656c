#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isg/coloring.hpp"
#include "isg/sum_graph.hpp"

namespace isg {

/// The four H families that carry explicit color-class constructions.
///   H2s: H^{-2,s}_{1,j}   H3s: H^{-3,s}_{m,j}
///   Hi2: H^{-i,2}_{m,1}   Hi3: H^{-i,3}_{m,j}
/// "size" is s for H2s/H3s and i for Hi2/Hi3.
enum class SchemeFamily { H2s, H3s, Hi2, Hi3 };

const char* to_string(SchemeFamily f);
std::optional<SchemeFamily> scheme_family_from_string(const std::string& name);

HParams family_params(SchemeFamily f, int size, int m, int j);

/// Thrown when no construction covers the requested parameters; callers are
/// expected to fall back to the exact solver.
class NoSchemeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// value = k_coef * k + offset
struct Affine {
    int k_coef = 0;
    int offset = 0;
    [[nodiscard]] constexpr int at(int k) const noexcept { return k_coef * k + offset; }
    bool operator==(const Affine&) const = default;
};

std::string to_string(const Affine& a);

struct PairTemplate {
    Affine a;
    Affine b;
    /// Set when the printed pair differs from the reading used to generate.
    std::optional<std::pair<Affine, Affine>> as_printed;
};

/// Chain of pairs sign*(t, K - t), K = k + sum_offset, for t = start, start+1,
/// ... while t <= floor((k + bound_offset) / 2), omitting t == skip.
struct FanChain {
    int sign = 1;
    int sum_offset = 0;
    int start = 1;
    int skip = 0;
    int bound_offset = 0;
    /// Printed partner of the final pair is sign * floor((k + partner_bound_offset) / 2).
    int partner_bound_offset = 0;
    /// Chain terms printed before the ellipsis, as written.
    std::vector<PairTemplate> shown;
};

/// Which k values a displayed line is instantiated for.
struct KSpec {
    enum class Kind { Constant, Top, List, From };
    Kind kind = Kind::Constant;
    std::vector<int> values;  // List
    int from = 0;             // From: k = from, ..., size
};

/// One displayed line of a construction.
struct ClassTemplate {
    KSpec ks;
    std::vector<PairTemplate> fixed;
    std::optional<FanChain> fan;
};

struct SchemeDescriptor {
    SchemeFamily family = SchemeFamily::H2s;
    char case_letter = 'A';
    int m = 0;
    int j = 0;
    int min_size = 0;
    /// Removed label the fan chains step over (j for H2s/H3s, m for Hi2/Hi3).
    int skip = 0;
    std::vector<ClassTemplate> lines;

    [[nodiscard]] std::string id() const;  // e.g. "Hi2/C"
    [[nodiscard]] bool applies(int size) const noexcept { return size >= min_size; }
    /// Claimed class count at this size: s, s+1, i or i+1.
    [[nodiscard]] int claimed_count(int size) const noexcept;
};

/// All 18 constructions (3 + 6 + 3 + 6 cases).
std::span<const SchemeDescriptor> scheme_catalog();

/// Construction with these (family, m, j) whose range contains size, or null.
const SchemeDescriptor* find_scheme(SchemeFamily f, int size, int m, int j);

enum class Reading { Corrected, AsPrinted };

/// Instantiates a construction. Throws NoSchemeError when size is below the
/// case threshold.
EdgeColoring generate_scheme(const SchemeDescriptor& d, int size,
                             Reading reading = Reading::Corrected);

/// Display line (1-based) and k value each generated class comes from.
struct ClassOrigin {
    int line = 0;
    std::optional<int> k;
};

std::vector<ClassOrigin> class_origins(const SchemeDescriptor& d, int size);

EdgeColoring scheme_h2s(int s, int j);
EdgeColoring scheme_h3s(int s, int m, int j);
EdgeColoring scheme_hi2(int i, int m);
EdgeColoring scheme_hi3(int i, int m, int j);

/// Generic dispatch from graph parameters; throws NoSchemeError.
EdgeColoring scheme_for(const HParams& p);

/// Internal inconsistencies of the printed constructions: pairs read
/// differently from how they are printed, and printed chain terms that do
/// not follow their own chain rule.
struct DisplayNote {
    std::string case_id;
    int line = 0;  // 1-based within the case
    std::string detail;
};

std::vector<DisplayNote> display_notes();

/// The theorem family whose statement covers p, if any.
std::optional<SchemeFamily> theorem_family(const HParams& p);

enum class Coverage { LemmaClaim, CaseConstruction, Uncovered };

const char* to_string(Coverage c);

Coverage coverage_of(const HParams& p);

struct SmallCaseClaim {
    int chi_prime = 0;
    std::string source;
};

/// The small-case chromatic index claimed for (family, size, m, j). Throws
/// std::out_of_range outside every small-case range.
SmallCaseClaim small_case_expected(SchemeFamily f, int size, int m, int j);

/// The explicit class lists given for the three smallest H^{-2,3}_{1,j}
/// instances, verbatim. The j = 3 listing lies outside 1 <= j < s.
struct SmallCaseListing {
    HParams params;
    EdgeColoring coloring;
};

std::vector<SmallCaseListing> small_case_listings();

}  // namespace isg
