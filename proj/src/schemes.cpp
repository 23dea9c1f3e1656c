#include "isg/schemes.hpp"

#include <algorithm>

namespace isg {

namespace {

constexpr Affine c(int x) { return {0, x}; }
constexpr Affine k(int x = 0) { return {1, x}; }    // k + x
constexpr Affine nk(int x = 0) { return {-1, x}; }  // -k + x, i.e. -(k - x)

PairTemplate P(int a, Affine b) { return {c(a), b, std::nullopt}; }
PairTemplate P(int a, int b) { return {c(a), c(b), std::nullopt}; }

/// A pair printed one way and read another.
PairTemplate misprinted(PairTemplate read, Affine printed_a, Affine printed_b) {
    read.as_printed = std::make_pair(printed_a, printed_b);
    return read;
}

KSpec top() { return {KSpec::Kind::Top, {}, 0}; }
KSpec constant() { return {KSpec::Kind::Constant, {}, 0}; }
KSpec list(std::vector<int> v) { return {KSpec::Kind::List, std::move(v), 0}; }
KSpec from(int lo) { return {KSpec::Kind::From, {}, lo}; }

FanChain fan(int sign, int sum_offset, int start, int bound, int partner_bound,
             std::vector<PairTemplate> shown) {
    return FanChain{sign, sum_offset, start, 0, bound, partner_bound, std::move(shown)};
}

ClassTemplate line(KSpec ks, std::vector<PairTemplate> fixed) {
    return {std::move(ks), std::move(fixed), std::nullopt};
}
ClassTemplate line(KSpec ks, std::vector<PairTemplate> fixed, FanChain f) {
    return {std::move(ks), std::move(fixed), std::move(f)};
}

SchemeDescriptor scheme(SchemeFamily f, char letter, int m, int j, int min_size,
                        std::vector<ClassTemplate> lines) {
    SchemeDescriptor d{f, letter, m, j, min_size, 0, std::move(lines)};
    d.skip = (f == SchemeFamily::H2s || f == SchemeFamily::H3s) ? j : m;
    for (auto& l : d.lines) {
        if (l.fan) l.fan->skip = d.skip;
    }
    return d;
}

// H^{-2,s}_{1,j}: s classes.
std::vector<SchemeDescriptor> h2s_cases() {
    using F = SchemeFamily;
    std::vector<SchemeDescriptor> out;
    out.push_back(scheme(F::H2s, 'A', 1, 1, 7, {
        line(top(), {P(0, -2)}, fan(+1, -1, 2, -2, +1, {P(2, k(-3)), P(3, k(-4))})),
        line(top(), {P(0, k(-1))}, fan(+1, 0, 2, -1, +2, {P(2, k(-2)), P(3, k(-3))})),
        line(top(), {P(0, k()), P(-2, 2)}),
        line(list({4, 5, 6}), {P(-2, k()), P(0, k(-2))}),
        line(from(7), {P(-2, k()), P(0, k(-2))}, fan(+1, -2, 2, -3, 0, {P(2, k(-4)), P(3, k(-5))})),
    }));
    out.push_back(scheme(F::H2s, 'B', 1, 2, 9, {
        line(top(), {P(0, -2)},
             fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(3, k(-4)), P(4, k(-5))})),
        line(top(), {P(0, k())}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(3, k(-3)), P(4, k(-4))})),
        line(top(), {P(0, k(-1))}),
        line(constant(), {P(-2, 3), P(0, 1)}),
        line(constant(), {P(-2, 5), P(0, 3)}),
        line(list({6, 7, 8}), {P(-2, k()), P(0, k(-2)), P(1, k(-3))}),
        line(from(9), {P(-2, k()), P(0, k(-2))},
             fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(3, k(-5)), P(4, k(-6)), P(5, k(-7))})),
    }));
    out.push_back(scheme(F::H2s, 'C', 1, 3, 11, {
        line(top(), {P(0, -2)},
             fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(2, k(-3)), P(4, k(-5))})),
        line(top(), {P(0, k())}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(2, k(-2)), P(4, k(-4))})),
        line(top(), {P(0, k(-1)), P(-2, 2)}),
        line(constant(), {P(0, 1)}),
        line(constant(), {P(-2, 4), P(0, 2)}),
        line(constant(), {P(-2, 6), P(0, 4)}),
        line(constant(), {P(-2, 7), P(0, 5), P(1, 4)}),
        line(list({8, 9, 10}), {P(-2, k()), P(0, k(-2)), P(1, k(-3)), P(2, k(-4))}),
        line(from(11), {P(-2, k()), P(0, k(-2))},
             fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(2, k(-4)), P(4, k(-6)), P(5, k(-7))})),
    }));
    return out;
}

// H^{-3,s}_{m,j}: s + 1 classes.
std::vector<SchemeDescriptor> h3s_cases() {
    using F = SchemeFamily;
    std::vector<SchemeDescriptor> out;
    out.push_back(scheme(F::H3s, 'A', 1, 1, 8, {
        line(top(), {P(0, -3)}, fan(+1, -2, 2, -3, 0, {P(2, k(-4)), P(3, k(-5))})),
        line(top(), {P(0, -2)}, fan(+1, -1, 2, -2, +1, {P(2, k(-3)), P(3, k(-4))})),
        line(top(), {P(0, k(-1))}, fan(+1, 0, 2, -1, +2, {P(2, k(-2)), P(3, k(-3))})),
        line(top(), {P(0, k()), P(-2, 2), P(-3, 3)}),
        line(top(), {P(-2, k()), P(0, k(-2))}),
        line(list({5, 6, 7}), {P(-3, k()), P(-2, k(-1)), P(0, k(-3))}),
        line(from(8), {P(-3, k()), P(-2, k(-1)), P(0, k(-3))},
             fan(+1, -3, 2, -4, -1, {P(2, k(-5)), P(3, k(-6))})),
    }));
    out.push_back(scheme(F::H3s, 'B', 2, 1, 8, {
        line(top(), {P(0, -3)}, fan(+1, -2, 2, -3, 0, {P(2, k(-4)), P(3, k(-5))})),
        line(top(), {P(-1, k(-1)), P(0, k(-2))},
             fan(+1, -1, 2, -2, +1, {P(2, k(-3)), P(3, k(-4))})),
        line(top(), {P(0, -1)}, fan(+1, 0, 2, -1, +2, {P(2, k(-2)), P(3, k(-3))})),
        line(top(), {P(0, k()), P(-3, 3)}),
        line(top(), {P(-3, 2), P(-1, k()), P(0, k(-1))}),
        line(list({5, 6, 7}), {P(-3, k()), P(-1, k(-2)), P(0, k(-3))}),
        line(from(8), {P(-3, k()), P(-1, k(-2)), P(0, k(-3))},
             fan(+1, -3, 2, -4, -1, {P(2, k(-5)), P(3, k(-6))})),
    }));
    out.push_back(scheme(F::H3s, 'C', 1, 2, 10, {
        line(top(), {P(0, -3)}, fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(3, k(-5))})),
        line(top(), {P(0, -2)}, fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(3, k(-4))})),
        line(top(), {P(0, k())}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(3, k(-3))})),
        line(top(), {P(0, k(-1)), P(-3, 3)}),
        line(top(), {P(-3, 1), P(-2, k()), P(0, k(-2))}),
        line(constant(), {P(-3, 4), P(-2, 3), P(0, 1)}),
        line(constant(), {P(-3, 6), P(-2, 5), P(0, 3)}),
        line(list({7, 8, 9}), {P(-3, k()), P(-2, k(-1)), P(0, k(-3)), P(1, k(-4))}),
        line(from(10), {P(-3, k()), P(-2, k(-1)), P(0, k(-3))},
             fan(+1, -3, 1, -4, -1, {P(1, k(-4)), P(3, k(-6))})),
    }));
    out.push_back(scheme(F::H3s, 'D', 2, 2, 10, {
        line(top(), {P(0, -3)}, fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(3, k(-5))})),
        line(top(), {P(-1, k()), P(0, k(-1))}, fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(3, k(-4))})),
        line(top(), {P(0, -1)}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(3, k(-3))})),
        line(top(), {P(0, k()), P(-1, 1), P(-3, 3)}),
        line(top(), {P(-1, k(-1)), P(0, k(-2))}),
        line(constant(), {P(-3, 4), P(0, 1)}),
        line(constant(), {P(-3, 6), P(-1, 4), P(0, 3)}),
        line(list({7, 8, 9}), {P(-3, k()), P(-1, k(-2)), P(0, k(-3)), P(1, k(-4))}),
        line(from(10), {P(-3, k()), P(-1, k(-2)), P(0, k(-3))},
             fan(+1, -3, 1, -4, -1, {P(1, k(-4)), P(3, k(-6))})),
    }));
    out.push_back(scheme(F::H3s, 'E', 1, 3, 12, {
        line(top(), {P(0, -3)}, fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(2, k(-4)), P(4, k(-6))})),
        line(top(), {P(0, -2)}, fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(2, k(-3)), P(4, k(-5))})),
        line(top(), {P(0, k())}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(2, k(-2)), P(4, k(-4))})),
        line(top(), {P(0, k(-1)), P(-2, 2)}),
        line(top(), {P(-3, 1), P(-2, k()), P(0, k(-2))}),
        line(constant(), {P(-3, 4), P(0, 1)}),
        line(constant(), {P(-3, 5), P(-2, 4), P(0, 2)}),
        line(constant(), {P(-3, 7), P(-2, 6), P(0, 4)}),
        line(constant(), {P(-3, 8), P(-2, 7), P(0, 5), P(1, 4)}),
        line(list({9, 10, 11}),
             {P(-3, k()), P(-2, k(-1)), P(0, k(-3)), P(1, k(-4)), P(2, k(-5))}),
        line(from(12), {P(-3, k()), P(-2, k(-1)), P(0, k(-3))},
             fan(+1, -3, 1, -4, -1, {P(1, k(-4)), P(2, k(-5)), P(4, k(-7))})),
    }));
    out.push_back(scheme(F::H3s, 'F', 2, 3, 12, {
        line(top(), {P(0, -3)}, fan(+1, -2, 1, -3, 0, {P(1, k(-3)), P(2, k(-4)), P(4, k(-6))})),
        line(top(), {P(-1, k(-1)), P(0, k())},
             fan(+1, -1, 1, -2, +1, {P(1, k(-2)), P(2, k(-3)), P(4, k(-5))})),
        line(top(), {P(0, -1)}, fan(+1, 0, 1, -1, +2, {P(1, k(-1)), P(2, k(-2)), P(4, k(-4))})),
        line(top(), {P(0, k(-2)), P(-1, 1)}),
        line(top(), {P(-3, 2), P(-1, k()), P(0, k(-1))}),
        line(constant(), {P(-3, 4), P(-1, 2), P(0, 1)}),
        line(constant(), {P(-3, 5), P(0, 2)}),
        line(constant(), {P(-3, 7), P(-1, 5), P(0, 4)}),
        line(constant(), {P(-3, 8), P(-1, 6), P(0, 5), P(1, 4)}),
        line(list({9, 10, 11}),
             {P(-3, k()), P(-1, k(-2)), P(0, k(-3)), P(1, k(-4)), P(2, k(-5))}),
        line(from(12), {P(-3, k()), P(-1, k(-2)), P(0, k(-3))},
             fan(+1, -3, 1, -4, -1, {P(1, k(-4)), P(2, k(-5)), P(4, k(-7))})),
    }));
    return out;
}

// H^{-i,2}_{m,1}: i classes.
std::vector<SchemeDescriptor> hi2_cases() {
    using F = SchemeFamily;
    std::vector<SchemeDescriptor> out;
    out.push_back(scheme(F::Hi2, 'A', 1, 1, 7, {
        line(top(), {P(0, 2)}, fan(-1, -1, 2, -2, +1, {P(-2, nk(3)), P(-3, nk(4))})),
        line(top(), {P(0, nk(1))}, fan(-1, 0, 2, -1, +2, {P(-2, nk(2)), P(-3, nk(3))})),
        line(top(), {P(0, nk()), P(-2, 2)}),
        line(list({4, 5, 6}), {P(2, nk()), P(0, nk(2))}),
        line(from(7), {P(2, nk()), P(0, nk(2))},
             fan(-1, -2, 2, -3, 0, {P(-2, nk(4)), P(-3, nk(5))})),
    }));
    out.push_back(scheme(F::Hi2, 'B', 2, 1, 9, {
        line(top(), {P(0, 2)},
             fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-3, nk(4)), P(-4, nk(5))})),
        line(top(), {P(0, nk())},
             fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-3, nk(3)), P(-4, nk(4))})),
        line(top(), {P(0, nk(1))}),
        line(constant(), {P(2, -3), P(0, -1)}),
        line(constant(), {P(2, -5), P(0, -3)}),
        line(list({6, 7, 8}), {P(2, nk()), P(0, nk(2)), P(-1, nk(3))}),
        line(from(9), {P(2, nk()), P(0, nk(2))},
             fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-3, nk(5)), P(-4, nk(6)), P(-5, nk(7))})),
    }));
    out.push_back(scheme(F::Hi2, 'C', 3, 1, 11, {
        line(top(), {P(0, 2)},
             fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-2, nk(3)), P(-4, nk(5))})),
        line(top(), {P(0, nk())},
             fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-2, nk(2)), P(-4, nk(4))})),
        line(top(), {P(0, nk(1)), P(-2, 2)}),
        line(constant(), {P(0, -1)}),
        line(constant(), {P(2, -4), P(0, -2)}),
        line(constant(), {P(2, -6), P(0, -4)}),
        line(constant(), {P(2, -7), P(0, -5), P(-1, -4)}),
        line(list({8, 9, 10}), {P(2, nk()), P(0, nk(2)), P(-1, nk(3)), P(-2, nk(4))}),
        line(from(11), {P(2, nk()), P(0, nk(2))},
             fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-2, nk(4)), P(-4, nk(6)), P(-5, nk(7))})),
    }));
    return out;
}

// H^{-i,3}_{m,j}: i + 1 classes.
std::vector<SchemeDescriptor> hi3_cases() {
    using F = SchemeFamily;
    std::vector<SchemeDescriptor> out;
    out.push_back(scheme(F::Hi3, 'A', 1, 1, 8, {
        line(top(), {P(0, 3)}, fan(-1, -2, 2, -3, 0, {P(-2, nk(4)), P(-3, nk(5))})),
        line(top(), {P(0, 2)}, fan(-1, -1, 2, -2, +1, {P(-2, nk(3)), P(-3, nk(4))})),
        line(top(), {P(0, nk(1))}, fan(-1, 0, 2, -1, +2, {P(-2, nk(2)), P(-3, nk(3))})),
        line(top(), {P(0, nk()), P(-2, 2), P(-3, 3)}),
        line(top(), {P(2, nk()), P(0, nk(2))}),
        // Printed "(2,-k-1)"; the next line and the mirrored H^{-3,s} line
        // both read (2, -(k-1)).
        line(list({5, 6, 7}),
             {P(3, nk()), misprinted(P(2, nk(1)), c(2), nk(-1)), P(0, nk(3))}),
        line(from(8), {P(3, nk()), P(2, nk(1)), P(0, nk(3))},
             fan(-1, -3, 2, -4, -1, {P(-2, nk(5)), P(-3, nk(6))})),
    }));
    out.push_back(scheme(F::Hi3, 'B', 1, 2, 8, {
        line(top(), {P(0, 3)}, fan(-1, -2, 2, -3, 0, {P(-2, nk(4)), P(-3, nk(5))})),
        line(top(), {P(1, nk(1)), P(0, nk(2))},
             fan(-1, -1, 2, -2, +1, {P(-2, nk(3)), P(-3, nk(4))})),
        line(top(), {P(0, 1)}, fan(-1, 0, 2, -1, +2, {P(-2, nk(2)), P(-3, nk(3))})),
        line(top(), {P(0, nk()), P(-3, 3)}),
        line(top(), {P(3, -2), P(1, nk()), P(0, nk(1))}),
        line(list({5, 6, 7}), {P(3, nk()), P(1, nk(2)), P(0, nk(3))}),
        line(from(8), {P(3, nk()), P(1, nk(2)), P(0, nk(3))},
             fan(-1, -3, 2, -4, -1, {P(-2, nk(5)), P(-3, nk(6))})),
    }));
    out.push_back(scheme(F::Hi3, 'C', 2, 1, 10, {
        line(top(), {P(0, 3)}, fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-3, nk(5))})),
        // Printed chain term "(-3,-k-4)" is checked against the chain rule.
        line(top(), {P(0, 2)}, fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-3, nk(-4))})),
        line(top(), {P(0, nk())}, fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-3, nk(3))})),
        line(top(), {P(0, nk(1)), P(-3, 3)}),
        line(top(), {P(3, -1), P(2, nk()), P(0, nk(2))}),
        line(constant(), {P(3, -4), P(2, -3), P(0, -1)}),
        line(constant(), {P(3, -6), P(2, -5), P(0, -3)}),
        line(list({7, 8, 9}), {P(3, nk()), P(2, nk(1)), P(0, nk(3)), P(-1, nk(4))}),
        line(from(10), {P(3, nk()), P(2, nk(1)), P(0, nk(3))},
             fan(-1, -3, 1, -4, -1, {P(-1, nk(4)), P(-3, nk(6))})),
    }));
    out.push_back(scheme(F::Hi3, 'D', 2, 2, 10, {
        line(top(), {P(0, 3)}, fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-3, nk(5))})),
        line(top(), {P(1, nk()), P(0, nk(1))},
             fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-3, nk(4))})),
        line(top(), {P(0, 1)}, fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-3, nk(3))})),
        line(top(), {P(0, nk()), P(-1, 1), P(-3, 3)}),
        line(top(), {P(1, nk(1)), P(0, nk(2))}),
        line(constant(), {P(3, -4), P(0, -1)}),
        line(constant(), {P(3, -6), P(1, -4), P(0, -3)}),
        line(list({7, 8, 9}), {P(3, nk()), P(1, nk(2)), P(0, nk(3)), P(-1, nk(4))}),
        line(from(10), {P(3, nk()), P(1, nk(2)), P(0, nk(3))},
             fan(-1, -3, 1, -4, -1, {P(-1, nk(4)), P(-3, nk(6))})),
    }));
    out.push_back(scheme(F::Hi3, 'E', 3, 1, 12, {
        line(top(), {P(0, 3)},
             fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-2, nk(4)), P(-4, nk(6))})),
        line(top(), {P(0, 2)},
             fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-2, nk(3)), P(-4, nk(5))})),
        line(top(), {P(0, nk())},
             fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-2, nk(2)), P(-4, nk(4))})),
        line(top(), {P(0, nk(1)), P(-2, 2)}),
        line(top(), {P(3, -1), P(2, nk()), P(0, nk(2))}),
        line(constant(), {P(3, -4), P(0, -1)}),
        line(constant(), {P(3, -5), P(2, -4), P(0, -2)}),
        line(constant(), {P(3, -7), P(2, -6), P(0, -4)}),
        line(constant(), {P(3, -8), P(2, -7), P(0, -5), P(-1, -4)}),
        line(list({9, 10, 11}),
             {P(3, nk()), P(2, nk(1)), P(0, nk(3)), P(-1, nk(4)), P(-2, nk(5))}),
        line(from(12), {P(3, nk()), P(2, nk(1)), P(0, nk(3))},
             fan(-1, -3, 1, -4, -1, {P(-1, nk(4)), P(-2, nk(5)), P(-4, nk(7))})),
    }));
    out.push_back(scheme(F::Hi3, 'F', 3, 2, 12, {
        line(top(), {P(0, 3)},
             fan(-1, -2, 1, -3, 0, {P(-1, nk(3)), P(-2, nk(4)), P(-4, nk(6))})),
        line(top(), {P(1, nk(1)), P(0, nk())},
             fan(-1, -1, 1, -2, +1, {P(-1, nk(2)), P(-2, nk(3)), P(-4, nk(5))})),
        line(top(), {P(0, 1)},
             fan(-1, 0, 1, -1, +2, {P(-1, nk(1)), P(-2, nk(2)), P(-4, nk(4))})),
        line(top(), {P(0, nk(2)), P(-1, 1)}),
        line(top(), {P(3, -2), P(1, nk()), P(0, nk(1))}),
        line(constant(), {P(3, -4), P(1, -2), P(0, -1)}),
        line(constant(), {P(3, -5), P(0, -2)}),
        line(constant(), {P(3, -7), P(1, -5), P(0, -4)}),
        line(constant(), {P(3, -8), P(1, -6), P(0, -5), P(-1, -4)}),
        line(list({9, 10, 11}),
             {P(3, nk()), P(1, nk(2)), P(0, nk(3)), P(-1, nk(4)), P(-2, nk(5))}),
        line(from(12), {P(3, nk()), P(1, nk(2)), P(0, nk(3))},
             fan(-1, -3, 1, -4, -1, {P(-1, nk(4)), P(-2, nk(5)), P(-4, nk(7))})),
    }));
    return out;
}

std::vector<SchemeDescriptor> build_catalog() {
    std::vector<SchemeDescriptor> all;
    for (auto* part : {&h2s_cases, &h3s_cases, &hi2_cases, &hi3_cases}) {
        auto cases = part();
        std::move(cases.begin(), cases.end(), std::back_inserter(all));
    }
    return all;
}

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

/// t values of a chain in order, for the given k.
std::vector<int> chain_steps(const FanChain& f, int k) {
    std::vector<int> ts;
    const int last = floor_half(k + f.bound_offset);
    for (int t = f.start; t <= last; ++t) {
        if (t != f.skip) ts.push_back(t);
    }
    return ts;
}

Edge instantiate(const PairTemplate& p, int k, Reading reading) {
    if (reading == Reading::AsPrinted && p.as_printed) {
        return Edge{p.as_printed->first.at(k), p.as_printed->second.at(k)};
    }
    return Edge{p.a.at(k), p.b.at(k)};
}

std::vector<int> k_values(const KSpec& ks, int size) {
    switch (ks.kind) {
        case KSpec::Kind::Constant: return {0};
        case KSpec::Kind::Top: return {size};
        case KSpec::Kind::List: return ks.values;
        case KSpec::Kind::From: {
            std::vector<int> out;
            for (int k = ks.from; k <= size; ++k) out.push_back(k);
            return out;
        }
    }
    return {};
}

}  // namespace

const char* to_string(SchemeFamily f) {
    switch (f) {
        case SchemeFamily::H2s: return "H2s";
        case SchemeFamily::H3s: return "H3s";
        case SchemeFamily::Hi2: return "Hi2";
        case SchemeFamily::Hi3: return "Hi3";
    }
    return "?";
}

std::optional<SchemeFamily> scheme_family_from_string(const std::string& name) {
    for (auto f : {SchemeFamily::H2s, SchemeFamily::H3s, SchemeFamily::Hi2, SchemeFamily::Hi3}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

HParams family_params(SchemeFamily f, int size, int m, int j) {
    switch (f) {
        case SchemeFamily::H2s: return {2, size, m, j};
        case SchemeFamily::H3s: return {3, size, m, j};
        case SchemeFamily::Hi2: return {size, 2, m, j};
        case SchemeFamily::Hi3: return {size, 3, m, j};
    }
    return {};
}

std::string to_string(const Affine& a) {
    std::string out;
    if (a.k_coef == 0) return std::to_string(a.offset);
    if (a.k_coef == 1) {
        out = "k";
    } else if (a.k_coef == -1) {
        out = "-k";
    } else {
        out = std::to_string(a.k_coef) + "k";
    }
    if (a.offset > 0) out += "+" + std::to_string(a.offset);
    if (a.offset < 0) out += std::to_string(a.offset);
    return out;
}

std::string SchemeDescriptor::id() const {
    return std::string(to_string(family)) + "/" + case_letter;
}

int SchemeDescriptor::claimed_count(int size) const noexcept {
    switch (family) {
        case SchemeFamily::H2s:
        case SchemeFamily::Hi2: return size;
        case SchemeFamily::H3s:
        case SchemeFamily::Hi3: return size + 1;
    }
    return 0;
}

std::span<const SchemeDescriptor> scheme_catalog() {
    static const std::vector<SchemeDescriptor> catalog = build_catalog();
    return catalog;
}

const SchemeDescriptor* find_scheme(SchemeFamily f, int size, int m, int j) {
    for (const auto& d : scheme_catalog()) {
        if (d.family == f && d.m == m && d.j == j && d.applies(size)) return &d;
    }
    return nullptr;
}

EdgeColoring generate_scheme(const SchemeDescriptor& d, int size, Reading reading) {
    if (!d.applies(size)) {
        throw NoSchemeError(d.id() + " requires size >= " + std::to_string(d.min_size) + " (got " +
                            std::to_string(size) + "); use the exact solver");
    }
    EdgeColoring out;
    out.provenance = Provenance::PaperScheme;
    out.case_id = d.id();
    for (const auto& tmpl : d.lines) {
        for (int k : k_values(tmpl.ks, size)) {
            std::vector<Edge> cls;
            for (const auto& p : tmpl.fixed) cls.push_back(instantiate(p, k, reading));
            if (tmpl.fan) {
                const FanChain& f = *tmpl.fan;
                const int total = k + f.sum_offset;
                for (int t : chain_steps(f, k)) cls.push_back(Edge{f.sign * t, f.sign * (total - t)});
            }
            out.classes.push_back(std::move(cls));
        }
    }
    return out;
}

std::vector<ClassOrigin> class_origins(const SchemeDescriptor& d, int size) {
    std::vector<ClassOrigin> out;
    if (!d.applies(size)) return out;
    for (std::size_t n = 0; n < d.lines.size(); ++n) {
        const auto& tmpl = d.lines[n];
        for (int k : k_values(tmpl.ks, size)) {
            out.push_back({static_cast<int>(n) + 1,
                           tmpl.ks.kind == KSpec::Kind::Constant ? std::nullopt : std::optional<int>(k)});
        }
    }
    return out;
}

namespace {

EdgeColoring generate_or_throw(SchemeFamily f, int size, int m, int j) {
    const SchemeDescriptor* d = find_scheme(f, size, m, j);
    if (d == nullptr) {
        throw NoSchemeError(std::string("no ") + to_string(f) + " construction for size=" +
                            std::to_string(size) + ", m=" + std::to_string(m) +
                            ", j=" + std::to_string(j) + "; use the exact solver");
    }
    return generate_scheme(*d, size);
}

}  // namespace

EdgeColoring scheme_h2s(int s, int j) { return generate_or_throw(SchemeFamily::H2s, s, 1, j); }
EdgeColoring scheme_h3s(int s, int m, int j) {
    return generate_or_throw(SchemeFamily::H3s, s, m, j);
}
EdgeColoring scheme_hi2(int i, int m) { return generate_or_throw(SchemeFamily::Hi2, i, m, 1); }
EdgeColoring scheme_hi3(int i, int m, int j) {
    return generate_or_throw(SchemeFamily::Hi3, i, m, j);
}

EdgeColoring scheme_for(const HParams& p) {
    auto f = theorem_family(p);
    if (!f) throw NoSchemeError("parameters lie outside every constructed family");
    const int size = (*f == SchemeFamily::H2s || *f == SchemeFamily::H3s) ? p.s : p.i;
    return generate_or_throw(*f, size, p.m, p.j);
}

std::vector<DisplayNote> display_notes() {
    // Tokenization slips that do not change any value.
    std::vector<DisplayNote> notes = {
        {"H2s/A", 2, "printed term \"(3,k-3))\" carries a doubled parenthesis; read as (3,k-3)"},
        {"H2s/B", 3, "printed class \"{(0,k-1),}\" has a dangling comma; read as {(0,k-1)}"},
        {"H3s/F", 3, "printed term \"(2,k-2))\" carries a doubled parenthesis; read as (2,k-2)"},
        {"Hi2/B", 7, "printed label \"-0\"; read as 0"},
    };

    for (const auto& d : scheme_catalog()) {
        for (std::size_t n = 0; n < d.lines.size(); ++n) {
            const auto& tmpl = d.lines[n];
            const int line_no = static_cast<int>(n) + 1;
            for (const auto& p : tmpl.fixed) {
                if (!p.as_printed) continue;
                notes.push_back({d.id(), line_no,
                                 "printed pair (" + to_string(p.as_printed->first) + "," +
                                     to_string(p.as_printed->second) + ") read as (" +
                                     to_string(p.a) + "," + to_string(p.b) + ")"});
            }
            if (!tmpl.fan) continue;
            const FanChain& f = *tmpl.fan;

            // Symbolic check of printed chain terms against the chain rule.
            int t = f.start;
            for (const auto& term : f.shown) {
                if (t == f.skip) ++t;
                const Affine want_a{0, f.sign * t};
                const Affine want_b{f.sign, f.sign * (f.sum_offset - t)};
                if (!(term.a == want_a && term.b == want_b)) {
                    notes.push_back({d.id(), line_no,
                                     "printed chain term (" + to_string(term.a) + "," +
                                         to_string(term.b) + ") does not follow its chain; "
                                         "generated as (" + to_string(want_a) + "," +
                                         to_string(want_b) + ")"});
                }
                ++t;
            }

            // Final pair: partner of t = floor((k+b)/2) must be floor((k+pb)/2).
            for (int k : {100, 101}) {
                const int last = floor_half(k + f.bound_offset);
                if (k + f.sum_offset - last != floor_half(k + f.partner_bound_offset)) {
                    notes.push_back({d.id(), line_no,
                                     "printed final chain pair disagrees with the chain sum for k of "
                                     "parity " + std::to_string(k % 2)});
                }
            }
        }
    }
    return notes;
}

std::optional<SchemeFamily> theorem_family(const HParams& p) {
    if (!p.valid()) return std::nullopt;
    if (p.i == 2 && p.m == 1 && p.s >= 3 && p.j <= 3) return SchemeFamily::H2s;
    if (p.i == 3 && p.m <= 2 && p.s >= 4 && p.j <= 3) return SchemeFamily::H3s;
    if (p.s == 2 && p.j == 1 && p.i >= 3 && p.m <= 3) return SchemeFamily::Hi2;
    if (p.s == 3 && p.j <= 2 && p.i >= 4 && p.m <= 3) return SchemeFamily::Hi3;
    return std::nullopt;
}

const char* to_string(Coverage c) {
    switch (c) {
        case Coverage::LemmaClaim: return "lemma-claim";
        case Coverage::CaseConstruction: return "case-construction";
        case Coverage::Uncovered: return "uncovered";
    }
    return "?";
}

namespace {

// Small-case upper limits keyed by the parameter that selects the range.
std::optional<int> small_case_limit(SchemeFamily f, int m, int j) {
    switch (f) {
        case SchemeFamily::H2s:
            if (m != 1 || j < 1 || j > 3) return std::nullopt;
            return j == 1 ? 6 : j == 2 ? 8 : 10;
        case SchemeFamily::H3s:
            if (m < 1 || m > 2 || j < 1 || j > 3) return std::nullopt;
            return j == 1 ? 7 : j == 2 ? 9 : 11;
        case SchemeFamily::Hi2:
            if (j != 1 || m < 1 || m > 3) return std::nullopt;
            return m == 1 ? 6 : m == 2 ? 8 : 10;
        case SchemeFamily::Hi3:
            if (j < 1 || j > 2 || m < 1 || m > 3) return std::nullopt;
            return m == 1 ? 7 : m == 2 ? 9 : 11;
    }
    return std::nullopt;
}

int small_case_min(SchemeFamily f) {
    return (f == SchemeFamily::H2s || f == SchemeFamily::Hi2) ? 3 : 4;
}

}  // namespace

SmallCaseClaim small_case_expected(SchemeFamily f, int size, int m, int j) {
    auto limit = small_case_limit(f, m, j);
    if (!limit || size < small_case_min(f) || size > *limit) {
        throw std::out_of_range(std::string("no small-case claim for ") + to_string(f) +
                                " size=" + std::to_string(size) + " m=" + std::to_string(m) +
                                " j=" + std::to_string(j));
    }
    const bool plus_one = f == SchemeFamily::H3s || f == SchemeFamily::Hi3;
    std::string source = std::string(to_string(f)) + " small-case lemma (" +
                         std::to_string(small_case_min(f)) + ".." + std::to_string(*limit) + ")";
    return {plus_one ? size + 1 : size, std::move(source)};
}

Coverage coverage_of(const HParams& p) {
    auto f = theorem_family(p);
    if (!f) return Coverage::Uncovered;
    const int size = (*f == SchemeFamily::H2s || *f == SchemeFamily::H3s) ? p.s : p.i;
    if (find_scheme(*f, size, p.m, p.j) != nullptr) return Coverage::CaseConstruction;
    auto limit = small_case_limit(*f, p.m, p.j);
    if (limit && size >= small_case_min(*f) && size <= *limit) return Coverage::LemmaClaim;
    return Coverage::Uncovered;
}

std::vector<SmallCaseListing> small_case_listings() {
    auto listing = [](int j, std::vector<std::vector<Edge>> classes) {
        EdgeColoring c;
        c.classes = std::move(classes);
        c.provenance = Provenance::PaperScheme;
        c.case_id = "H2s/small-j" + std::to_string(j);
        return SmallCaseListing{HParams{2, 3, 1, j}, std::move(c)};
    };
    return {
        listing(1, {{{-2, 0}}, {{-2, 2}, {0, 3}}, {{0, 3}}}),
        listing(2, {{{-2, 0}}, {{-2, 3}, {0, 1}}, {{0, 3}}}),
        listing(3, {{{-2, 0}}, {{-2, 2}, {0, 1}}, {{0, 2}}}),
    };
}

}  // namespace isg
