#include "wdual/fixtures.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "wdual/chaingap.hpp"
#include "wdual/matrixgap.hpp"

namespace wdual {

namespace {

struct Checker {
    FixtureResult res;

    void check(bool ok, const std::string& what, const std::string& got = "", const std::string& want = "") {
        if (ok) {
            res.lines.push_back("ok: " + what);
        } else {
            std::string line = "MISMATCH: " + what;
            if (!want.empty()) line += " (expected " + want + ", got " + got + ")";
            res.lines.push_back(line);
            res.ok = false;
        }
    }

    template <typename T>
    void eq(const T& got, const T& want, const std::string& what) {
        std::ostringstream g, w;
        g << got;
        w << want;
        check(got == want, what, g.str(), w.str());
    }

    void eq_enum(const PartitionEnumerator& got, const PartitionEnumerator& want, const std::string& what) {
        check(got == want, what, got.to_string(), want.to_string());
    }

    void eq_wwe(const WWEnumerator& got, const WWEnumerator& want, const std::string& what) {
        check(got == want, what, got.to_string(), want.to_string());
    }

    void eq_prefix(const WWEnumerator& got, const WWEnumerator& want, long maxdeg, const std::string& what) {
        check(got.prefix_equals(want, maxdeg), what, got.to_string(maxdeg), want.to_string(maxdeg));
    }
};

PartitionEnumerator make_enum(long classes, long length,
                              const std::vector<std::pair<long, std::vector<long>>>& terms) {
    PartitionEnumerator e(classes, length);
    for (const auto& [coeff, exps] : terms) e.add_term(exps, coeff);
    return e;
}

WWEnumerator make_wwe(const std::vector<std::pair<long, long>>& terms) {
    WWEnumerator e;
    for (const auto& [deg, coeff] : terms) e.add(deg, coeff);
    return e;
}

std::vector<Int> to_ints(const std::vector<long>& v) { return std::vector<Int>(v.begin(), v.end()); }

// ---------------------------------------------------------------------
// chain fixtures over Z/8Z, k = 3

struct ChainExpectation {
    std::vector<long> weight;              // w_0, w_1, w_2
    long c_repeat;                         // multiplicity on each theta class
    long c_zeros;                          // zero columns on C
    std::vector<long> a;                   // a_0..a_2
    long d_zeros;                          // zero columns on D
    long delta_cap_value;
    long length;
    std::vector<std::pair<long, std::vector<long>>> seC, seD;
    std::vector<std::pair<long, long>> wwe;
    std::vector<std::pair<long, long>> dualC, dualD;  // prefixes through degree 3
    long delta_singleton_value;
};

FixtureResult run_chain_fixture(const std::string& id, const ChainExpectation& ex) {
    Checker ck;
    ck.res.id = id;
    WeightTable w = WeightTable::chain(2, 3, to_ints(ex.weight));
    ChainPair pair = build_chain_pair(w, 3);

    for (long j = 0; j < 3; ++j)
        ck.eq(pair.C.cyclic_mult()[static_cast<size_t>(j)], Int(ex.c_repeat),
              "C multiplicity on theta^" + std::to_string(j));
    ck.eq(pair.C.zero_mult(), Int(ex.c_zeros), "C zero columns");
    for (long i = 0; i < 3; ++i) ck.eq(pair.a[static_cast<size_t>(i)], Int(ex.a[static_cast<size_t>(i)]), "a_" + std::to_string(i));
    ck.eq(pair.D.zero_mult(), Int(ex.d_zeros), "D zero columns");
    ck.eq(pair.delta_cap, Int(ex.delta_cap_value), "Delta_3");
    ck.eq(pair.length, Int(ex.length), "common length");

    ck.eq_enum(pair.C.se(), make_enum(4, ex.length, ex.seC), "symmetrized enumerator of C");
    ck.eq_enum(pair.D.se(), make_enum(4, ex.length, ex.seD), "symmetrized enumerator of D");

    WWEnumerator expect_wwe = make_wwe(ex.wwe);
    WWEnumerator wc = pair.C.wwe(w), wd = pair.D.wwe(w);
    ck.eq_wwe(wc, expect_wwe, "primal enumerator of C");
    ck.eq_wwe(wd, expect_wwe, "primal enumerator of D");

    WWEnumerator dc = specialize(dual_se(pair.C), w);
    WWEnumerator dd = specialize(dual_se(pair.D), w);
    ck.eq_prefix(dc, make_wwe(ex.dualC), 3, "dual enumerator of C through degree 3");
    ck.eq_prefix(dd, make_wwe(ex.dualD), 3, "dual enumerator of D through degree 3");
    ck.check(dual_wwe_prefix(pair.C, w, 3).prefix_equals(dc, 3) && dual_wwe_prefix(pair.D, w, 3).prefix_equals(dd, 3),
             "truncated dual pipeline agrees with the full transform");

    Int ds = delta_singleton(w, 3);
    ck.eq(ds, Int(ex.delta_singleton_value), "delta_3 closed form");
    MinWeightData mw = min_weight(w);
    if (mw.wmin.fits_slong_p()) {
        long d = mw.wmin.get_si();
        ck.eq(Int(dc.coefficient(d) - dd.coefficient(d)), ds, "delta_3 against the dual coefficients");
    }
    return ck.res;
}

// ---------------------------------------------------------------------
// matrix fixtures over M_{2x2}(F_2), m = 3, published ordering

std::vector<Int> eta_vec(const std::vector<long>& v) { return to_ints(v); }

void check_eta(Checker& ck, const MatrixCode& code, const std::vector<long>& expected, const std::string& what) {
    std::vector<Int> want = eta_vec(expected);
    bool ok = code.mult() == want;
    std::string got, w;
    for (const Int& x : code.mult()) got += x.get_str() + " ";
    for (const Int& x : want) w += x.get_str() + " ";
    ck.check(ok, what, got, w);
}

void check_omega(Checker& ck, const MatrixCode& code, const WeightTable& wt, const std::vector<long>& expected,
                 const std::string& what) {
    std::vector<Int> want = eta_vec(expected);
    std::vector<Int> got = code.orbit_weights(wt);
    bool ok = got == want;
    std::string g, w;
    for (const Int& x : got) g += x.get_str() + " ";
    for (const Int& x : want) w += x.get_str() + " ";
    ck.check(ok, what, g, w);
}

struct MatrixDuals {
    long maxdeg;
    std::vector<std::pair<long, long>> dualC, dualD;
};

void check_matrix_duals(Checker& ck, const MatrixCode& C, const MatrixCode& D, const WeightTable& w,
                        const MatrixDuals& ex, bool full_transform) {
    WWEnumerator dc, dd;
    if (full_transform) {
        dc = specialize(dual_se(C), w);
        dd = specialize(dual_se(D), w);
        ck.check(dual_wwe_prefix(C, w, ex.maxdeg).prefix_equals(dc, ex.maxdeg) &&
                     dual_wwe_prefix(D, w, ex.maxdeg).prefix_equals(dd, ex.maxdeg),
                 "truncated dual pipeline agrees with the full transform");
    } else {
        dc = dual_wwe_prefix(C, w, ex.maxdeg);
        dd = dual_wwe_prefix(D, w, ex.maxdeg);
    }
    ck.eq_prefix(dc, make_wwe(ex.dualC), ex.maxdeg,
                 "dual enumerator of C through degree " + std::to_string(ex.maxdeg));
    ck.eq_prefix(dd, make_wwe(ex.dualD), ex.maxdeg,
                 "dual enumerator of D through degree " + std::to_string(ex.maxdeg));
}

FixtureResult run_deg23() {
    Checker ck;
    ck.res.id = "mat-f2-deg23";
    WeightTable w = WeightTable::matrix(2, 2, {2, 3});
    DegeneratePair dp = build_degenerate_pair(2, 2, 3, 2, w, SubspaceOrdering::PaperK2M3Q2);

    check_eta(ck, dp.plus, {1, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0}, "eta_plus");
    check_eta(ck, dp.minus, {0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0}, "eta_minus");
    std::vector<long> omega{0, 4, 4, 2, 4, 6, 6, 6, 8, 6, 6, 6, 8, 6, 8};
    check_omega(ck, dp.plus, w, omega, "omega_plus");
    check_omega(ck, dp.minus, w, omega, "omega_minus");
    ck.eq(dp.length, Int(4), "common length");

    ck.eq_enum(dp.plus.se(),
               make_enum(3, 4,
                         {{1, {4, 0, 0}}, {3, {3, 1, 0}}, {9, {2, 2, 0}}, {27, {1, 3, 0}}, {6, {2, 0, 2}}, {18, {1, 1, 2}}}),
               "rank partition enumerator of C+");
    ck.eq_enum(dp.minus.se(),
               make_enum(3, 4, {{1, {4, 0, 0}}, {3, {3, 1, 0}}, {9, {2, 2, 0}}, {33, {1, 3, 0}}, {18, {0, 4, 0}}}),
               "rank partition enumerator of C-");

    WWEnumerator expect = make_wwe({{0, 1}, {2, 3}, {4, 9}, {6, 33}, {8, 18}});
    ck.eq_wwe(dp.plus.wwe(w), expect, "primal enumerator of C+");
    ck.eq_wwe(dp.minus.wwe(w), expect, "primal enumerator of C-");

    std::vector<Int> bp = dp.plus.rank_sums(), bm = dp.minus.rank_sums();
    std::vector<Int> diff{bm[1] - bp[1], bm[2] - bp[2]};
    std::vector<Int> contribs = singleton_deltas(diff, 2, 2);
    ck.eq(contribs[0], Int(0), "net rank-1 singleton contribution");
    ck.eq(contribs[1], Int(-6), "net rank-2 singleton contribution");

    check_matrix_duals(ck, dp.plus, dp.minus, w,
                       {4, {{0, 1}, {2, 12}, {3, 6}, {4, 36}}, {{0, 1}, {2, 12}, {4, 54}}}, true);
    return ck.res;
}

struct SwapExpectation {
    std::vector<long> weight;  // w_1, w_2
    std::vector<long> sigma;   // over nonzero orbits, published ordering
    long c, a, b, Delta;
    long length;
    std::vector<long> etaC, etaD;      // full orbit-index vectors
    std::vector<long> omegaC, omegaD;  // full orbit-index vectors
    std::vector<std::pair<long, std::vector<long>>> seC, seD;
    std::vector<std::pair<long, long>> wwe;
    MatrixDuals duals;
    std::vector<long> delta_eta_bar;       // ranks 0..2
    std::vector<long> singleton_contribs;  // ranks 1..2
    bool full_transform;
};

FixtureResult run_swap_fixture(const std::string& id, const SwapExpectation& ex) {
    Checker ck;
    ck.res.id = id;
    WeightTable w = WeightTable::matrix(2, 2, to_ints(ex.weight));
    SwapPair sp = build_swap(1, 2, 3, 2, w, SubspaceOrdering::PaperK2M3Q2);

    {
        std::vector<Int> want = to_ints(ex.sigma);
        std::string got, wnt;
        for (const Int& x : sp.sigma) got += x.get_str() + " ";
        for (const Int& x : want) wnt += x.get_str() + " ";
        ck.check(sp.sigma == want, "sigma", got, wnt);
    }
    ck.eq(sp.c, Int(ex.c), "scaling constant c");
    ck.eq(sp.a, Int(ex.a), "padding constant a");
    ck.eq(sp.b, Int(ex.b), "padding constant b");
    ck.eq(sp.delta, Int(ex.Delta), "Delta");
    ck.eq(sp.length, Int(ex.length), "common length");

    check_eta(ck, sp.C, ex.etaC, "eta_C");
    check_eta(ck, sp.D, ex.etaD, "eta_D");
    check_omega(ck, sp.C, w, ex.omegaC, "omega_C");
    check_omega(ck, sp.D, w, ex.omegaD, "omega_D");

    ck.eq_enum(sp.C.se(), make_enum(3, ex.length, ex.seC), "rank partition enumerator of C");
    ck.eq_enum(sp.D.se(), make_enum(3, ex.length, ex.seD), "rank partition enumerator of D");

    WWEnumerator expect = make_wwe(ex.wwe);
    ck.eq_wwe(sp.C.wwe(w), expect, "primal enumerator of C");
    ck.eq_wwe(sp.D.wwe(w), expect, "primal enumerator of D");

    std::vector<Int> bc = sp.C.rank_sums(), bd = sp.D.rank_sums();
    for (long i = 0; i <= 2; ++i)
        ck.eq(Int(bd[static_cast<size_t>(i)] - bc[static_cast<size_t>(i)]), Int(ex.delta_eta_bar[static_cast<size_t>(i)]),
              "rank-sum difference at rank " + std::to_string(i));
    std::vector<Int> contribs =
        singleton_deltas({bd[1] - bc[1], bd[2] - bc[2]}, 2, 2);
    ck.eq(contribs[0], Int(ex.singleton_contribs[0]), "net rank-1 singleton contribution");
    ck.eq(contribs[1], Int(ex.singleton_contribs[1]), "net rank-2 singleton contribution");

    check_matrix_duals(ck, sp.C, sp.D, w, ex.duals, ex.full_transform);
    return ck.res;
}

FixtureResult run_lindep() {
    Checker ck;
    ck.res.id = "mat-f2-w45-lindep";
    WeightTable w = WeightTable::matrix(2, 2, {4, 5});
    auto orbits = orbit_index_for(2, 3, 2, SubspaceOrdering::PaperK2M3Q2);
    auto F = field(2);
    MatrixCode C(2, 3, F, orbits, eta_vec({0, 2, 3, 3, 1, 2, 3, 2, 2, 6, 2, 6, 6, 2, 6}));
    MatrixCode D(2, 3, F, orbits, eta_vec({0, 2, 2, 4, 2, 2, 2, 2, 6, 6, 2, 2, 6, 2, 6}));

    ck.eq(C.length(), Int(46), "length of C");
    ck.eq(D.length(), Int(46), "length of D");
    check_omega(ck, C, w, {0, 136, 144, 144, 136, 136, 144, 136, 192, 192, 192, 192, 192, 192, 192}, "omega_C");
    check_omega(ck, D, w, {0, 136, 144, 136, 136, 136, 144, 144, 192, 192, 192, 192, 192, 192, 192}, "omega_D");

    std::vector<Int> bc = C.rank_sums(), bd = D.rank_sums();
    for (long i = 0; i <= 2; ++i)
        ck.eq(Int(bd[static_cast<size_t>(i)] - bc[static_cast<size_t>(i)]), Int(0),
              "rank-sum difference at rank " + std::to_string(i));

    ck.eq_enum(C.se(),
               make_enum(3, 46,
                         {{1, {46, 0, 0}},
                          {12, {12, 34, 0}},
                          {9, {10, 36, 0}},
                          {6, {1, 33, 12}},
                          {18, {2, 28, 16}},
                          {18, {3, 23, 20}}}),
               "rank partition enumerator of C");
    ck.eq_enum(D.se(),
               make_enum(3, 46,
                         {{1, {46, 0, 0}}, {12, {12, 34, 0}}, {9, {10, 36, 0}}, {36, {2, 28, 16}}, {6, {4, 18, 24}}}),
               "rank partition enumerator of D");

    WWEnumerator expect = make_wwe({{0, 1}, {136, 12}, {144, 9}, {192, 42}});
    ck.eq_wwe(C.wwe(w), expect, "primal enumerator of C");
    ck.eq_wwe(D.wwe(w), expect, "primal enumerator of D");

    check_matrix_duals(ck, C, D, w,
                       {12,
                        {{0, 1}, {4, 48}, {8, 4059}, {9, 1440}, {10, 522}, {12, 290160}},
                        {{0, 1}, {4, 48}, {8, 4059}, {9, 1440}, {10, 522}, {12, 290112}}},
                       true);
    return ck.res;
}

const std::map<std::string, std::function<FixtureResult()>>& fixture_table() {
    static const std::map<std::string, std::function<FixtureResult()>> table = {
        {"chain-z8-homog",
         [] {
             return run_chain_fixture(
                 "chain-z8-homog",
                 {{1, 1, 2},
                  8,
                  0,
                  {2, 4, 8},
                  0,
                  0,
                  24,
                  {{4, {8, 8, 8, 0}}, {2, {0, 8, 8, 8}}, {1, {0, 0, 8, 16}}, {1, {0, 0, 0, 24}}},
                  {{4, {0, 0, 16, 8}}, {2, {0, 0, 12, 12}}, {1, {0, 0, 8, 16}}, {1, {0, 0, 0, 24}}},
                  {{0, 1}, {16, 1}, {24, 2}, {32, 4}},
                  {{0, 1}, {1, 16}, {2, 1848}, {3, 60400}},
                  {{0, 1}, {1, 48}, {2, 1832}, {3, 64656}},
                  -32});
         }},
        {"chain-z8-122",
         [] {
             return run_chain_fixture(
                 "chain-z8-122",
                 {{1, 2, 2},
                  8,
                  6,
                  {2, 6, 10},
                  0,
                  -6,
                  30,
                  {{4, {8, 8, 8, 6}}, {2, {0, 8, 8, 14}}, {1, {0, 0, 8, 22}}, {1, {0, 0, 0, 30}}},
                  {{4, {0, 0, 20, 10}}, {2, {0, 0, 16, 14}}, {1, {0, 0, 8, 22}}, {1, {0, 0, 0, 30}}},
                  {{0, 1}, {16, 1}, {32, 2}, {40, 4}},
                  {{0, 1}, {1, 24}, {2, 1074}, {3, 36584}},
                  {{0, 1}, {2, 1354}, {3, 34304}},
                  24});
         }},
        {"chain-z8-121",
         [] {
             return run_chain_fixture(
                 "chain-z8-121",
                 {{1, 2, 1},
                  4,
                  11,
                  {1, 5, 9},
                  0,
                  -11,
                  23,
                  {{4, {4, 4, 4, 11}}, {2, {0, 4, 4, 15}}, {1, {0, 0, 4, 19}}, {1, {0, 0, 0, 23}}},
                  {{4, {0, 0, 16, 7}}, {2, {0, 0, 12, 11}}, {1, {0, 0, 4, 19}}, {1, {0, 0, 0, 23}}},
                  {{0, 1}, {4, 1}, {12, 2}, {16, 4}},
                  {{0, 1}, {1, 63}, {2, 2111}, {3, 51635}},
                  {{0, 1}, {1, 23}, {2, 1195}, {3, 38431}},
                  40});
         }},
        {"mat-f2-deg23", run_deg23},
        {"mat-f2-w12",
         [] {
             return run_swap_fixture(
                 "mat-f2-w12",
                 {{1, 2},
                  {-1, -1, -1, -1, -3, 1, -1, 0, 0, 0, 0, 0, 2, 2},
                  2,
                  3,
                  0,
                  -3,
                  65,
                  {0, 3, 3, 3, 26, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
                  {3, 2, 2, 2, 25, 0, 4, 2, 3, 3, 3, 3, 3, 5, 5},
                  {0, 30, 53, 53, 53, 30, 53, 30, 74, 74, 74, 74, 74, 74, 51},
                  {0, 30, 51, 51, 53, 30, 53, 30, 74, 74, 74, 74, 74, 74, 53},
                  {{1, {65, 0, 0}},
                   {9, {35, 30, 0}},
                   {12, {12, 53, 0}},
                   {6, {26, 27, 12}},
                   {36, {3, 50, 12}}},
                  {{1, {65, 0, 0}},
                   {9, {35, 30, 0}},
                   {6, {14, 51, 0}},
                   {6, {12, 53, 0}},
                   {6, {3, 50, 12}},
                   {24, {5, 46, 14}},
                   {6, {28, 21, 16}},
                   {6, {7, 42, 16}}},
                  {{0, 1}, {30, 9}, {51, 6}, {53, 12}, {74, 36}},
                  {3, {{0, 1}, {1, 132}, {2, 15762}, {3, 1674894}}, {{0, 1}, {1, 138}, {2, 16176}, {3, 1695210}}},
                  {3, -7, 4},
                  {6, 18},
                  true});
         }},
        {"mat-f2-w45-swap",
         [] {
             return run_swap_fixture(
                 "mat-f2-w45-swap",
                 {{4, 5},
                  {2, 2, 2, -1, 3, 1, 2, 0, 0, 0, 0, 0, -4, -4},
                  2,
                  1,
                  0,
                  3,
                  77,
                  {3, 4, 4, 4, 22, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
                  {0, 6, 6, 6, 21, 7, 5, 6, 4, 4, 4, 4, 4, 0, 0},
                  {0, 160, 232, 232, 232, 160, 232, 160, 296, 296, 296, 296, 296, 296, 224},
                  {0, 160, 224, 224, 232, 160, 232, 160, 296, 296, 296, 296, 296, 296, 232},
                  {{1, {77, 0, 0}},
                   {9, {37, 40, 0}},
                   {12, {19, 58, 0}},
                   {6, {25, 36, 16}},
                   {36, {7, 54, 16}}},
                  {{1, {77, 0, 0}},
                   {9, {37, 40, 0}},
                   {6, {21, 56, 0}},
                   {6, {19, 58, 0}},
                   {6, {21, 48, 8}},
                   {6, {5, 64, 8}},
                   {24, {6, 59, 12}},
                   {6, {7, 54, 16}}},
                  {{0, 1}, {160, 9}, {224, 6}, {232, 12}, {296, 36}},
                  {8, {{0, 1}, {4, 165}, {5, 18}, {8, 21186}}, {{0, 1}, {4, 171}, {8, 21918}}},
                  {-3, 11, -8},
                  {6, -18},
                  true});
         }},
        {"mat-f2-w45-lindep", run_lindep},
        {"mat-f2-w37",
         [] {
             return run_swap_fixture(
                 "mat-f2-w37",
                 {{3, 7},
                  {-3, -3, -3, -5, -11, 5, -3, 0, 0, 0, 0, 0, 6, 6},
                  10,
                  4,
                  0,
                  -11,
                  278,
                  {0, 12, 12, 12, 122, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12},
                  {11, 9, 9, 9, 117, 1, 17, 9, 12, 12, 12, 12, 12, 18, 18},
                  {0, 360, 690, 690, 690, 360, 690, 360, 990, 990, 990, 990, 990, 990, 660},
                  {0, 360, 660, 660, 690, 360, 690, 360, 990, 990, 990, 990, 990, 990, 690},
                  {{1, {278, 0, 0}},
                   {9, {158, 120, 0}},
                   {12, {48, 230, 0}},
                   {6, {122, 108, 48}},
                   {36, {12, 218, 48}}},
                  {{1, {278, 0, 0}},
                   {9, {158, 120, 0}},
                   {6, {58, 220, 0}},
                   {6, {48, 230, 0}},
                   {6, {12, 218, 48}},
                   {24, {20, 204, 54}},
                   {6, {128, 90, 60}},
                   {6, {28, 190, 60}}},
                  {{0, 1}, {360, 9}, {660, 6}, {690, 12}, {990, 36}},
                  {9,
                   {{0, 1}, {3, 582}, {6, 316947}, {9, 152382900}},
                   {{0, 1}, {3, 612}, {6, 326649}, {7, 66}, {9, 154592448}}},
                  {11, -23, 12},
                  {30, 66},
                  true});
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : fixture_table()) v.push_back(id);
        return v;
    }();
    return ids;
}

FixtureResult run_fixture(const std::string& id) {
    auto it = fixture_table().find(id);
    if (it == fixture_table().end()) throw std::invalid_argument("unknown fixture id: " + id);
    return it->second();
}

}  // namespace wdual
