// wdual: construct linear codes over chain rings and matrix rings, compute
// exact weight enumerators and their MacWilliams transforms, build
// equal-enumerator code pairs, and classify whether a maximal-symmetry
// weight respects duality.

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "wdual/fixtures.hpp"
#include "wdual/json_io.hpp"

namespace {

using namespace wdual;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::vector<Int> parse_weights(const std::string& csv) {
    std::vector<Int> out;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) out.emplace_back(cur);
    return out;
}

std::vector<Int> to_ints(const std::vector<long>& v) { return std::vector<Int>(v.begin(), v.end()); }

WeightTable make_weight(const std::string& ring, long q, long mk, const std::string& weights) {
    std::vector<Int> v = parse_weights(weights);
    if (ring == "chain") return WeightTable::chain(q, mk, std::move(v));
    if (ring == "matrix") return WeightTable::matrix(q, mk, std::move(v));
    throw std::invalid_argument("--ring must be chain or matrix");
}

SubspaceOrdering parse_ordering(const std::string& s) {
    if (s == "lex") return SubspaceOrdering::Lex;
    if (s == "paper-k2m3q2") return SubspaceOrdering::PaperK2M3Q2;
    throw std::invalid_argument("--ordering must be lex or paper-k2m3q2");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& format, const std::string& text_form) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text_form << "\n";
}

int cmd_classify(const std::string& ring, long q, long mk, const std::string& weights, const std::string& format,
                 bool verify, long verify_maxlen) {
    WeightTable w = make_weight(ring, q, mk, weights);
    Verdict v = w.family() == Family::Chain ? classify_chain(w) : classify_matrix(w);
    if (verify && v.kind == Verdict::Kind::Fails) {
        bool ok = w.family() == Family::Chain ? verify_chain_witness(v, w, verify_maxlen)
                                              : verify_matrix_witness(v, w, verify_maxlen);
        if (!ok) {
            std::cerr << "witness verification failed\n";
            return kExitMismatch;
        }
    }
    json j = verdict_to_json(v);
    std::ostringstream text;
    text << j["verdict"].get<std::string>() << " [" << v.rule << "]";
    if (v.kind == Verdict::Kind::Fails) {
        text << " witness:";
        if (v.k > 0) text << " k=" << v.k;
        if (v.s > 0) text << " s=" << v.s;
        if (v.j > 0) text << " j=" << v.j;
        if (v.m > 0) text << " m=" << v.m;
        text << " d=" << v.d.get_str() << " delta=" << v.delta.get_str();
    } else if (!v.detail.empty()) {
        text << " " << v.detail;
    }
    emit(j, format, text.str());
    return kExitOk;
}

int cmd_construct(const std::string& ring, long q, long mk, const std::string& weights, long k, long s, long m,
                  long degenerate_j, const std::string& ordering, const std::string& format) {
    WeightTable w = make_weight(ring, q, mk, weights);
    json j;
    std::string text;
    if (w.family() == Family::Chain) {
        ChainPair pair = build_chain_pair(w, k);
        j = chain_pair_to_json(pair);
        text = "chain pair k=" + std::to_string(k) + " length=" + pair.length.get_str() +
               " Delta=" + pair.delta_cap.get_str();
    } else {
        long mm = m > 0 ? m : w.k() + 1;
        SubspaceOrdering ord = parse_ordering(ordering);
        if (degenerate_j > 0) {
            DegeneratePair dp = build_degenerate_pair(degenerate_j, w.k(), mm, q, w, ord);
            j = degenerate_pair_to_json(dp);
            text = "degenerate pair j=" + std::to_string(degenerate_j) + " length=" + dp.length.get_str();
        } else {
            SwapPair sp = build_swap(s, w.k(), mm, q, w, ord);
            j = swap_pair_to_json(sp);
            text = "swap pair s=" + std::to_string(s) + " length=" + sp.length.get_str() + " c=" + sp.c.get_str() +
                   " a=" + sp.a.get_str() + " b=" + sp.b.get_str() + " Delta=" + sp.delta.get_str();
        }
    }
    emit(j, format, text);
    return kExitOk;
}

int cmd_enumerate(const std::string& code_path, const std::string& weights, const std::string& ordering,
                  const std::string& format) {
    ParsedCode pc = code_from_json(load_json(code_path), parse_ordering(ordering));
    PartitionEnumerator se = pc.chain ? pc.chain->se() : pc.matrix->se();
    json j;
    j["se"] = enumerator_to_json(se);
    std::string text = "se = " + se.to_string();
    if (!weights.empty()) {
        long q = pc.chain ? pc.chain->ring().q() : pc.matrix->q();
        long mk = pc.chain ? pc.chain->ring().m() : pc.matrix->k();
        WeightTable w = make_weight(pc.chain ? "chain" : "matrix", q, mk, weights);
        WWEnumerator wwe = pc.chain ? pc.chain->wwe(w) : pc.matrix->wwe(w);
        j["wwe"] = wwe_to_json(wwe);
        text += "\nwwe = " + wwe.to_string();
    }
    emit(j, format, text);
    return kExitOk;
}

int cmd_dual(const std::string& code_path, const std::string& weights, long maxdeg, const std::string& ordering,
             const std::string& format, bool brute, const Int& budget) {
    ParsedCode pc = code_from_json(load_json(code_path), parse_ordering(ordering));
    long q = pc.chain ? pc.chain->ring().q() : pc.matrix->q();
    long mk = pc.chain ? pc.chain->ring().m() : pc.matrix->k();
    WeightTable w = make_weight(pc.chain ? "chain" : "matrix", q, mk, weights);
    WWEnumerator dual;
    if (brute)
        dual = pc.chain ? brute_force_dual_wwe(pc.chain->ring(), pc.chain->generator_rows(), w, budget)
                        : brute_force_dual_wwe(*pc.matrix, w, budget);
    else if (maxdeg >= 0)
        dual = pc.chain ? dual_wwe_prefix(*pc.chain, w, maxdeg) : dual_wwe_prefix(*pc.matrix, w, maxdeg);
    else
        dual = pc.chain ? dual_wwe(*pc.chain, w) : dual_wwe(*pc.matrix, w);
    json j = wwe_to_json(dual);
    emit(j, format, "dual wwe = " + dual.to_string(brute ? -1 : maxdeg));
    return kExitOk;
}

int cmd_reproduce(const std::string& fixture, bool all, const std::string& format) {
    std::vector<std::string> ids;
    if (all)
        ids = fixture_ids();
    else
        ids.push_back(fixture);
    bool ok = true;
    json report = json::array();
    for (const std::string& id : ids) {
        FixtureResult r = run_fixture(id);
        ok = ok && r.ok;
        if (format == "json") {
            json f;
            f["fixture"] = r.id;
            f["ok"] = r.ok;
            f["checks"] = r.lines;
            report.push_back(f);
        } else {
            std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.id << "\n";
            for (const std::string& line : r.lines)
                if (!r.ok || line.rfind("MISMATCH", 0) == 0) std::cout << "  " << line << "\n";
        }
    }
    if (format == "json") std::cout << report.dump(2) << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int cmd_sweep(const std::string& ring, const std::string& qlist, long max_mk, long max_weight) {
    std::vector<long> qs;
    for (const Int& v : parse_weights(qlist)) qs.push_back(v.get_si());
    struct Point {
        long q, mk;
        std::vector<long> tuple;
    };
    std::vector<Point> points;
    for (long q : qs)
        for (long mk = 2; mk <= max_mk; ++mk) {
            std::vector<long> tuple(static_cast<size_t>(mk), 1);
            for (;;) {
                points.push_back({q, mk, tuple});
                size_t i = 0;
                while (i < tuple.size() && tuple[i] == max_weight) tuple[i++] = 1;
                if (i == tuple.size()) break;
                ++tuple[i];
            }
        }
    // fan out over a worker pool; rows are emitted in grid order regardless
    auto classify_point = [&](const Point& pt) {
        WeightTable w = ring == "chain" ? WeightTable::chain(pt.q, pt.mk, to_ints(pt.tuple))
                                        : WeightTable::matrix(pt.q, pt.mk, to_ints(pt.tuple));
        Verdict v = ring == "chain" ? classify_chain(w) : classify_matrix(w);
        std::ostringstream row;
        std::string verdict = v.kind == Verdict::Kind::Respects  ? "respects"
                              : v.kind == Verdict::Kind::Fails   ? "fails"
                                                                 : "unknown";
        row << ring << "," << pt.q << "," << pt.mk << ",";
        for (size_t i = 0; i < pt.tuple.size(); ++i) row << (i ? ";" : "") << pt.tuple[i];
        row << "," << verdict << "," << v.rule;
        if (ring == "chain")
            row << "," << v.k;
        else
            row << "," << v.s << "," << v.j;
        if (v.kind == Verdict::Kind::Fails)
            row << "," << v.d.get_str() << "," << v.delta.get_str();
        else
            row << ",,";
        return row.str();
    };
    std::vector<std::string> rows(points.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                rows[i] = classify_point(points[i]);
            }
        });
    for (auto& th : pool) th.join();
    std::cout << (ring == "chain" ? "family,q,m,weights,verdict,rule,k,d,delta\n"
                                  : "family,q,k,weights,verdict,rule,s,j,d,delta\n");
    for (const std::string& row : rows) std::cout << row << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight enumerators, MacWilliams transforms, and duality classification\n"
                 "for linear codes over finite chain rings and matrix rings"};
    app.require_subcommand(1);

    std::string ring = "chain", weights, format = "text", ordering = "lex";
    long q = 2, m = 0, k = 0, s = 1, degenerate_j = 0, maxdeg = -1;
    std::string code_path, fixture;
    bool all = false, verify = false, brute = false;
    long verify_maxlen = 2000;
    std::string budget = "16777216";
    std::string qlist = "2";
    long max_mk = 3, max_weight = 3;

    auto add_weight_opts = [&](CLI::App* cmd, bool need_weights) {
        cmd->add_option("--ring", ring, "alphabet family: chain or matrix")->required();
        cmd->add_option("--q", q, "residue field size (chain) or base field size (matrix)")->required();
        cmd->add_option("--m", m, "nilpotency index (chain family)");
        cmd->add_option("--k", k, "matrix size (matrix family)");
        auto* wopt = cmd->add_option("--weights", weights, "comma-separated orbit-class values");
        if (need_weights) wopt->required();
        cmd->add_option("--format", format, "json or text");
    };

    auto* classify = app.add_subcommand("classify", "decide whether a weight respects duality");
    add_weight_opts(classify, true);
    classify->add_flag("--verify", verify, "re-verify the witness through the enumerator pipeline");
    classify->add_option("--verify-max-length", verify_maxlen, "skip verification beyond this length");

    auto* construct = app.add_subcommand("construct", "build an equal-enumerator code pair");
    add_weight_opts(construct, true);
    construct->add_option("--K", k, "chain module index k (2 <= k <= m)");
    construct->add_option("--s", s, "swap rank (matrix family)");
    construct->add_option("--M", m, "information module width (matrix family; default k+1)");
    construct->add_option("--degenerate-j", degenerate_j, "use the degenerate construction at this block");
    construct->add_option("--ordering", ordering, "lex or paper-k2m3q2");

    auto* enumerate = app.add_subcommand("enumerate", "compute enumerators of a code descriptor");
    enumerate->add_option("--code", code_path, "JSON code descriptor file")->required();
    enumerate->add_option("--weights", weights, "optional weights for the w-weight enumerator");
    enumerate->add_option("--ordering", ordering, "lex or paper-k2m3q2");
    enumerate->add_option("--format", format, "json or text");

    auto* dual = app.add_subcommand("dual", "dual w-weight enumerator through the MacWilliams transform");
    dual->add_option("--code", code_path, "JSON code descriptor file")->required();
    dual->add_option("--weights", weights, "comma-separated orbit-class values")->required();
    dual->add_option("--max-degree", maxdeg, "truncate at this degree (-1 = full)");
    dual->add_option("--ordering", ordering, "lex or paper-k2m3q2");
    dual->add_option("--format", format, "json or text");
    dual->add_flag("--brute", brute, "use the brute-force oracle instead of the transform");
    dual->add_option("--budget", budget, "search-space cap for the brute-force oracle");

    auto* reproduce = app.add_subcommand("reproduce", "re-run the published example computations");
    reproduce->add_option("--fixture", fixture, "fixture id");
    reproduce->add_flag("--all", all, "run every fixture");
    reproduce->add_option("--format", format, "json or text");

    auto* sweep = app.add_subcommand("sweep", "classify a whole parameter grid, CSV output");
    sweep->add_option("--ring", ring, "chain or matrix")->required();
    sweep->add_option("--q-list", qlist, "comma-separated field sizes");
    sweep->add_option("--max-m", max_mk, "largest m (chain) or k (matrix)");
    sweep->add_option("--max-weight", max_weight, "largest orbit-class value");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(ring, q, ring == "chain" ? m : k, weights, format, verify, verify_maxlen);
        if (construct->parsed())
            return cmd_construct(ring, q, ring == "chain" ? m : k, weights, k, s, m, degenerate_j, ordering, format);
        if (enumerate->parsed()) return cmd_enumerate(code_path, weights, ordering, format);
        if (dual->parsed()) return cmd_dual(code_path, weights, maxdeg, ordering, format, brute, Int(budget));
        if (reproduce->parsed()) {
            if (!all && fixture.empty()) {
                std::cerr << "choose --fixture ID or --all; known ids:\n";
                for (const auto& id : fixture_ids()) std::cerr << "  " << id << "\n";
                return kExitInvalid;
            }
            return cmd_reproduce(fixture, all, format);
        }
        if (sweep->parsed()) return cmd_sweep(ring, qlist, max_mk, max_weight);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
