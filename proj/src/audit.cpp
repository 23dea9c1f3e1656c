#include "isg/audit.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace isg {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t n = 0; n < parts.size(); ++n) {
        if (n) out += sep;
        out += parts[n];
    }
    return out;
}

std::string label_list(const std::vector<Label>& xs) {
    std::string out;
    for (std::size_t n = 0; n < xs.size(); ++n) {
        if (n) out += ",";
        out += std::to_string(xs[n]);
    }
    return out;
}

int family_size(SchemeFamily f, const HParams& p) {
    return (f == SchemeFamily::H2s || f == SchemeFamily::H3s) ? p.s : p.i;
}

void deviate(AuditReport& r, std::string what) {
    r.findings.push_back(what);
    r.deviations.push_back(std::move(what));
}

std::string origin_text(const ClassOrigin& o) {
    std::string out = "line " + std::to_string(o.line);
    if (o.k) out += " k=" + std::to_string(*o.k);
    return out;
}

std::vector<std::string> trace_violations(const SchemeDescriptor& d, int size,
                                          const VerificationReport& report) {
    const auto origins = class_origins(d, size);
    std::vector<std::string> out;
    for (const auto& v : report.violations) {
        std::string where;
        if (v.class_index >= 0 && static_cast<std::size_t>(v.class_index) < origins.size()) {
            where = " [" + d.id() + " " + origin_text(origins[v.class_index]) + "]";
        }
        out.push_back(v.describe() + where);
    }
    return out;
}

}  // namespace

std::optional<Claims> claims_for(const HParams& p) {
    auto f = theorem_family(p);
    if (!f) return std::nullopt;
    const int size = family_size(*f, p);
    const bool plus_one = *f == SchemeFamily::H3s || *f == SchemeFamily::Hi3;
    Claims c;
    c.chi_prime = plus_one ? size + 1 : size;
    c.zsum = *c.chi_prime + 1;
    c.perfect = Perfection::NonPerfect;
    c.source = std::string(to_string(*f)) + " closed forms";
    return c;
}

Engines Engines::parse(const std::string& list) {
    Engines e{false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        if (item == "edge-sum") {
            e.edge_sum = true;
        } else if (item == "paper" || item == "paper-scheme") {
            e.paper = true;
        } else if (item == "exact") {
            e.exact = true;
        } else if (item == "greedy") {
            e.greedy = true;
        } else {
            throw std::invalid_argument("unknown engine '" + item + "'");
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("engine list is empty");
    return e;
}

const char* to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::Agree: return "agree";
        case AuditStatus::Deviate: return "deviate";
        case AuditStatus::Unresolved: return "unresolved";
    }
    return "?";
}

AuditReport audit_h(const HParams& p, const AuditOptions& opts) {
    p.validate();
    AuditReport r;
    auto fam = theorem_family(p);
    r.family = fam ? to_string(*fam) : "H";
    r.i = p.i;
    r.s = p.s;
    r.m = p.m;
    r.j = p.j;
    r.coverage = coverage_of(p);

    const SumGraph g = build_h_graph(p);
    const int delta = max_degree(g);
    r.max_degree = delta;

    const auto claims = claims_for(p);
    if (claims) {
        r.claimed_chi = claims->chi_prime;
        r.claimed_zsum = claims->zsum;
        r.perfect_claimed = claims->perfect;
    }

    bool unresolved = false;

    if (opts.engines.edge_sum) {
        const int direct = edge_sum_chromatic(g);
        const int classes = edge_sum_classes(g).count();
        ++r.checks;
        if (direct != classes) {
            deviate(r, "distinct sum count " + std::to_string(direct) + " differs from class count " +
                           std::to_string(classes));
        }
        r.computed_zsum = direct;
    }

    // Independent certificates for chi'. A verified coloring with Delta
    // classes is optimal because Delta is a lower bound.
    std::optional<int> certified;

    if (opts.engines.paper && r.coverage == Coverage::CaseConstruction) {
        const int size = family_size(*fam, p);
        const SchemeDescriptor* d = find_scheme(*fam, size, p.m, p.j);
        r.case_id = d->id();
        const EdgeColoring c = generate_scheme(*d, size);
        const VerificationReport rep = verify_coloring(g, c);
        r.scheme_count = c.count();
        r.scheme_verified = rep.ok();
        ++r.checks;
        if (!rep.ok()) {
            for (auto& t : trace_violations(*d, size, rep)) deviate(r, "scheme: " + t);
        } else if (c.count() == delta) {
            certified = c.count();
        }
        if (claims && c.count() != *claims->chi_prime) {
            ++r.checks;
            deviate(r, d->id() + " produces " + std::to_string(c.count()) + " classes, claimed " +
                           std::to_string(*claims->chi_prime));
        }
    }

    if (opts.engines.exact) {
        ExactResult ex = exact_chromatic_index(g, opts.budget);
        ex.witness.reset();
        r.exact = ex;
        if (ex.exact()) {
            ++r.checks;
            if (certified && *certified != ex.chi_prime) {
                deviate(r, "scheme certificate " + std::to_string(*certified) +
                               " disagrees with exact " + std::to_string(ex.chi_prime));
            }
            certified = ex.chi_prime;
        } else if (!certified) {
            unresolved = true;
            r.findings.push_back("exact solver exceeded its budget after " +
                                 std::to_string(ex.nodes_expanded) + " nodes");
        }
    }

    if (opts.engines.greedy) {
        const EdgeColoring c = greedy_coloring(g);
        r.greedy_count = c.count();
        ++r.checks;
        if (!verify_coloring(g, c).ok()) deviate(r, "greedy coloring failed verification");
        if (certified && c.count() < *certified) {
            deviate(r, "greedy count " + std::to_string(c.count()) + " is below chi' " +
                           std::to_string(*certified));
        }
        if (!certified && c.count() == delta) certified = c.count();
    }

    r.computed_chi = certified;
    if (certified) r.perfect_computed = classify_perfect(g, *certified);

    if (claims) {
        if (r.computed_chi) {
            ++r.checks;
            if (*r.computed_chi != *claims->chi_prime) {
                deviate(r, "chi' claimed " + std::to_string(*claims->chi_prime) + ", computed " +
                               std::to_string(*r.computed_chi));
            }
        } else if (opts.engines.exact || opts.engines.paper || opts.engines.greedy) {
            unresolved = true;
        }
        if (r.computed_zsum) {
            ++r.checks;
            if (*r.computed_zsum != *claims->zsum) {
                const auto empty = empty_allowed_sums(g);
                std::string why = "chi'_Z-sum claimed " + std::to_string(*claims->zsum) +
                                  ", direct count " + std::to_string(*r.computed_zsum);
                if (!empty.empty()) why += " (empty sum class E_" + label_list(empty) + ")";
                deviate(r, why);
            }
        }
        if (r.perfect_computed) {
            ++r.checks;
            if (*r.perfect_computed != *claims->perfect) {
                deviate(r, std::string("claimed ") + to_string(*claims->perfect) + ", computed " +
                               to_string(*r.perfect_computed));
            }
        }
    }

    if (!r.deviations.empty()) {
        r.status = AuditStatus::Deviate;
    } else if (unresolved) {
        r.status = AuditStatus::Unresolved;
    }
    return r;
}

AuditReport audit_grs(int r_, int s, const AuditOptions& opts) {
    AuditReport r;
    r.family = "Grs";
    r.i = -r_;
    r.s = s;
    const SumGraph g = build_integral_sum_graph(r_, s);
    r.max_degree = max_degree(g);

    if (std::abs(r_) + s >= 3) {
        ++r.checks;
        const std::int64_t formula = edge_count_formula(r_, s);
        if (formula != static_cast<std::int64_t>(g.size())) {
            std::string what = "|E| formula " + std::to_string(formula) + ", enumerated " +
                               std::to_string(g.size());
            // Outside r < 0 < s the formula is recorded, not asserted.
            if (r_ < 0 && 0 < s) {
                deviate(r, what);
            } else {
                r.findings.push_back(what);
            }
        }
    }
    if (r_ < 0 && 0 < s) {
        for (const auto& rec : g.degrees()) {
            ++r.checks;
            const int branches = degree_formula_branch_count(rec.label, r_, s);
            if (branches != 1) {
                deviate(r, "label " + std::to_string(rec.label) + " matches " +
                               std::to_string(branches) + " degree branches");
            }
            const int f = degree_formula(rec.label, r_, s);
            if (f != rec.degree) {
                deviate(r, "deg(" + std::to_string(rec.label) + ") formula " + std::to_string(f) +
                               ", enumerated " + std::to_string(rec.degree));
            }
        }
    }

    if (opts.engines.edge_sum) r.computed_zsum = edge_sum_chromatic(g);
    bool unresolved = false;
    if (opts.engines.exact) {
        ExactResult ex = exact_chromatic_index(g, opts.budget);
        ex.witness.reset();
        r.exact = ex;
        if (ex.exact()) {
            r.computed_chi = ex.chi_prime;
        } else {
            unresolved = true;
            r.findings.push_back("exact solver exceeded its budget");
        }
    }
    if (opts.engines.greedy) {
        r.greedy_count = greedy_upper_bound(g);
        if (r.computed_chi && *r.greedy_count < *r.computed_chi) {
            deviate(r, "greedy count below chi'");
        }
    }
    if (r.computed_chi) r.perfect_computed = classify_perfect(g, *r.computed_chi);

    if (!r.deviations.empty()) {
        r.status = AuditStatus::Deviate;
    } else if (unresolved) {
        r.status = AuditStatus::Unresolved;
    }
    return r;
}

AuditReport audit_gn(int n, const AuditOptions& opts) {
    AuditReport r;
    r.family = "Gn";
    r.s = n;
    const SumGraph g = build_sum_graph(n);
    if (g.size() > 0) r.max_degree = max_degree(g);
    for (const auto& rec : g.degrees()) {
        ++r.checks;
        const int f = gn_degree_formula(rec.label, n);
        if (f != rec.degree) {
            deviate(r, "deg(" + std::to_string(rec.label) + ") formula " + std::to_string(f) +
                           ", enumerated " + std::to_string(rec.degree));
        }
    }
    if (opts.engines.edge_sum) r.computed_zsum = edge_sum_chromatic(g);
    bool unresolved = false;
    if (opts.engines.exact) {
        ExactResult ex = exact_chromatic_index(g, opts.budget);
        ex.witness.reset();
        r.exact = ex;
        if (ex.exact()) {
            r.computed_chi = ex.chi_prime;
        } else {
            unresolved = true;
        }
    }
    if (opts.engines.greedy) r.greedy_count = greedy_upper_bound(g);
    if (r.computed_chi) r.perfect_computed = classify_perfect(g, *r.computed_chi);

    if (!r.deviations.empty()) {
        r.status = AuditStatus::Deviate;
    } else if (unresolved) {
        r.status = AuditStatus::Unresolved;
    }
    return r;
}

CaseAudit audit_case(const SchemeDescriptor& d, int size, Reading reading) {
    CaseAudit a;
    a.case_id = d.id();
    a.size = size;
    a.params = family_params(d.family, size, d.m, d.j);
    a.claimed_count = d.claimed_count(size);
    const SumGraph g = build_h_graph(a.params);
    const EdgeColoring c = generate_scheme(d, size, reading);
    a.class_count = c.count();
    a.report = verify_coloring(g, c);
    a.findings = trace_violations(d, size, a.report);
    if (a.class_count != a.claimed_count) {
        a.findings.push_back("class count " + std::to_string(a.class_count) + ", claimed " +
                             std::to_string(a.claimed_count));
    }
    return a;
}

std::vector<CaseAudit> audit_constructions(int sizes) {
    std::vector<CaseAudit> out;
    for (const auto& d : scheme_catalog()) {
        for (int n = 0; n < sizes; ++n) out.push_back(audit_case(d, d.min_size + n));
    }
    return out;
}

std::vector<ListingAudit> audit_small_case_listings() {
    std::vector<ListingAudit> out;
    for (const auto& l : small_case_listings()) {
        ListingAudit a;
        a.params = l.params;
        a.in_domain = l.params.valid();
        if (!a.in_domain) {
            a.detail = "parameters violate 1 <= m < i, 1 <= j < s";
        } else {
            const SumGraph g = build_h_graph(l.params);
            a.report = verify_coloring(g, l.coloring);
            std::vector<std::string> lines;
            for (const auto& v : a.report->violations) lines.push_back(v.describe());
            a.detail = a.report->ok() ? "verified" : join(lines, "; ");
        }
        out.push_back(std::move(a));
    }
    return out;
}

IntRange IntRange::parse(const std::string& text) {
    auto to_int = [&](const std::string& t) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) {
            throw std::invalid_argument("bad integer range '" + text + "'");
        }
        return v;
    };
    // Split on the first ':' that is not a leading sign position.
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
}

const char* to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::H2s: return "H2s";
        case SweepFamily::H3s: return "H3s";
        case SweepFamily::Hi2: return "Hi2";
        case SweepFamily::Hi3: return "Hi3";
        case SweepFamily::H: return "H";
        case SweepFamily::Grs: return "Grs";
        case SweepFamily::Gn: return "Gn";
    }
    return "?";
}

std::optional<SweepFamily> sweep_family_from_string(const std::string& name) {
    for (auto f : {SweepFamily::H2s, SweepFamily::H3s, SweepFamily::Hi2, SweepFamily::Hi3,
                   SweepFamily::H, SweepFamily::Grs, SweepFamily::Gn}) {
        std::string n = to_string(f);
        std::string lower = n;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (name == n || name == lower) return f;
    }
    return std::nullopt;
}

namespace {

struct Instance {
    SweepFamily family;
    int a = 0, b = 0, c = 0, d = 0;
};

std::vector<Instance> enumerate(const SweepSpec& spec) {
    std::vector<Instance> out;
    switch (spec.family) {
        case SweepFamily::Grs:
            for (int r = spec.r.lo; r <= spec.r.hi; ++r) {
                for (int s = spec.s.lo; s <= spec.s.hi; ++s) {
                    if (r <= 0 && s >= 0 && s - r >= 1) out.push_back({spec.family, r, s});
                }
            }
            return out;
        case SweepFamily::Gn:
            for (int n = spec.n.lo; n <= spec.n.hi; ++n) {
                if (n >= 1) out.push_back({spec.family, n});
            }
            return out;
        default: break;
    }
    IntRange i = spec.i, s = spec.s, m = spec.m, j = spec.j;
    std::optional<SchemeFamily> want;
    switch (spec.family) {
        case SweepFamily::H2s: i = {2, 2}, m = {1, 1}, want = SchemeFamily::H2s; break;
        case SweepFamily::H3s: i = {3, 3}, want = SchemeFamily::H3s; break;
        case SweepFamily::Hi2: s = {2, 2}, j = {1, 1}, want = SchemeFamily::Hi2; break;
        case SweepFamily::Hi3: s = {3, 3}, want = SchemeFamily::Hi3; break;
        default: break;
    }
    for (int iv = i.lo; iv <= i.hi; ++iv) {
        for (int sv = s.lo; sv <= s.hi; ++sv) {
            for (int mv = m.lo; mv <= m.hi; ++mv) {
                for (int jv = j.lo; jv <= j.hi; ++jv) {
                    HParams p{iv, sv, mv, jv};
                    if (!p.valid()) continue;
                    if (want && theorem_family(p) != want) continue;
                    out.push_back({spec.family, iv, sv, mv, jv});
                }
            }
        }
    }
    return out;
}

AuditReport run_one(const Instance& in, const AuditOptions& opts) {
    switch (in.family) {
        case SweepFamily::Grs: return audit_grs(in.a, in.b, opts);
        case SweepFamily::Gn: return audit_gn(in.a, opts);
        default: return audit_h(HParams{in.a, in.b, in.c, in.d}, opts);
    }
}

}  // namespace

std::vector<AuditReport> run_sweep(const SweepSpec& spec) {
    const auto instances = enumerate(spec);
    std::vector<AuditReport> out(instances.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(instances.size())));
    if (workers <= 1) {
        for (std::size_t n = 0; n < instances.size(); ++n) out[n] = run_one(instances[n], spec.options);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t n = next++; n < instances.size(); n = next++) {
                    out[n] = run_one(instances[n], spec.options);
                }
            } catch (...) {
                errors[w] = std::current_exception();
                next = instances.size();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

namespace {

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string opt(const std::optional<Perfection>& v) { return v ? to_string(*v) : ""; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string audit_csv_header() {
    return "family,i,s,m,j,claimed_chi,computed_chi,claimed_zsum,computed_zsum,perfect_claimed,"
           "perfect_computed,status,reason";
}

std::string audit_csv_row(const AuditReport& r) {
    std::ostringstream os;
    os << r.family << ',' << r.i << ',' << r.s << ',' << r.m << ',' << r.j << ','
       << opt(r.claimed_chi) << ',' << opt(r.computed_chi) << ',' << opt(r.claimed_zsum) << ','
       << opt(r.computed_zsum) << ',' << opt(r.perfect_claimed) << ',' << opt(r.perfect_computed)
       << ',' << to_string(r.status) << ',' << csv_field(join(r.findings, "; "));
    return os.str();
}

void write_audit_csv(std::ostream& out, const std::vector<AuditReport>& reports) {
    out << kAuditCsvSchema << '\n' << audit_csv_header() << '\n';
    for (const auto& r : reports) out << audit_csv_row(r) << '\n';
}

AuditSummary summarize(const std::vector<AuditReport>& reports) {
    AuditSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
            case AuditStatus::Agree: ++s.agree; break;
            case AuditStatus::Deviate: ++s.deviate; break;
            case AuditStatus::Unresolved: ++s.unresolved; break;
        }
    }
    return s;
}

std::string to_string(const AuditSummary& s) {
    return "agree=" + std::to_string(s.agree) + " deviate=" + std::to_string(s.deviate) +
           " unresolved=" + std::to_string(s.unresolved);
}

}  // namespace isg
