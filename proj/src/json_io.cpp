#include "wdual/json_io.hpp"

namespace wdual {

namespace {

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

json weight_to_json(const WeightTable& w) {
    json j;
    j["family"] = w.family() == Family::Chain ? "chain" : "matrix";
    j["q"] = w.q();
    if (w.family() == Family::Chain)
        j["m"] = w.m();
    else
        j["k"] = w.k();
    json vals = json::array();
    for (const Int& v : w.values()) vals.push_back(int_to_json(v));
    j["values"] = vals;
    return j;
}

WeightTable weight_from_json(const json& j) {
    std::string fam = j.at("family").get<std::string>();
    long q = j.at("q").get<long>();
    std::vector<Int> values;
    for (const auto& v : j.at("values")) values.push_back(int_from_json(v));
    if (fam == "chain") return WeightTable::chain(q, j.at("m").get<long>(), std::move(values));
    if (fam == "matrix") return WeightTable::matrix(q, j.at("k").get<long>(), std::move(values));
    throw std::invalid_argument("weight_from_json: unknown family " + fam);
}

json enumerator_to_json(const PartitionEnumerator& e) {
    json j;
    j["classes"] = e.classes();
    j["length"] = e.length();
    json terms = json::array();
    for (const auto& [exps, coeff] : e.terms()) {
        json t;
        t["exponents"] = exps;
        t["coeff"] = coeff.get_str();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

PartitionEnumerator enumerator_from_json(const json& j) {
    PartitionEnumerator e(j.at("classes").get<long>(), j.at("length").get<long>());
    for (const auto& t : j.at("terms")) {
        PartitionEnumerator::Exponents exps;
        for (const auto& v : t.at("exponents")) exps.push_back(v.get<long>());
        e.add_term(exps, Int(t.at("coeff").get<std::string>()));
    }
    return e;
}

json wwe_to_json(const WWEnumerator& e) {
    json terms = json::array();
    for (const auto& [d, c] : e.terms()) {
        json t;
        t["deg"] = d;
        t["coeff"] = c.get_str();
        terms.push_back(t);
    }
    json j;
    j["terms"] = terms;
    return j;
}

json code_to_json(const ChainCode& c) {
    json j;
    j["family"] = "chain";
    json mod;
    mod["type"] = c.module_kind() == ChainCode::Module::Cyclic ? "cyclic" : "semisimple";
    mod["q"] = c.ring().q();
    mod["m"] = c.ring().m();
    mod["k"] = c.k();
    mod["representation"] =
        c.ring().rep() == ChainRing::Rep::IntegersModPM ? "integers-mod-pm" : "poly-quotient";
    j["module"] = mod;
    json mult = json::array();
    if (c.module_kind() == ChainCode::Module::Cyclic) {
        long m = c.ring().m(), k = c.k();
        for (long t = 0; t < k; ++t) {
            if (c.cyclic_mult()[static_cast<size_t>(t)] == 0) continue;
            json e;
            e["orbit"] = "theta^" + std::to_string(m - k + t);
            e["count"] = int_to_json(c.cyclic_mult()[static_cast<size_t>(t)]);
            mult.push_back(e);
        }
    } else {
        for (const auto& mu : sk_functional_orbits(c.k(), c.ring().q())) {
            auto it = c.semisimple_mult().find(mu);
            if (it == c.semisimple_mult().end() || it->second == 0) continue;
            std::string id = "mu:";
            for (size_t i = 0; i < mu.size(); ++i) {
                if (i > 0) id += ',';
                id += std::to_string(mu[i]);
            }
            json e;
            e["orbit"] = id;
            e["count"] = int_to_json(it->second);
            mult.push_back(e);
        }
    }
    j["multiplicities"] = mult;
    j["zero_count"] = int_to_json(c.zero_mult());
    return j;
}

json code_to_json(const MatrixCode& c) {
    json j;
    j["family"] = "matrix";
    json mod;
    mod["type"] = "matrix-module";
    mod["q"] = c.q();
    mod["k"] = c.k();
    mod["m"] = c.m();
    j["module"] = mod;
    json mult = json::array();
    for (long t = 1; t < c.orbits().count(); ++t) {
        if (c.mult()[static_cast<size_t>(t)] == 0) continue;
        json e;
        e["orbit"] = c.orbits().at(t).key();
        e["count"] = int_to_json(c.mult()[static_cast<size_t>(t)]);
        mult.push_back(e);
    }
    j["multiplicities"] = mult;
    j["zero_count"] = int_to_json(c.mult()[0]);
    return j;
}

ParsedCode code_from_json(const json& j, SubspaceOrdering ord) {
    ParsedCode out;
    std::string fam = j.at("family").get<std::string>();
    const json& mod = j.at("module");
    if (fam == "chain") {
        long q = mod.at("q").get<long>(), m = mod.at("m").get<long>(), k = mod.at("k").get<long>();
        std::string rep = mod.value("representation", "");
        ChainRing ring = [&]() {
            if (rep == "poly-quotient") return ChainRing::poly_quotient(q, m);
            if (rep == "integers-mod-pm" || rep.empty()) {
                long p, e;
                prime_power(q, p, e);
                if (e == 1 && rep == "integers-mod-pm") return ChainRing::integers_mod(q, m);
                if (rep.empty()) return e == 1 ? ChainRing::integers_mod(q, m) : ChainRing::poly_quotient(q, m);
            }
            throw std::invalid_argument("code_from_json: representation not available for this q");
        }();
        Int zero = int_from_json(j.value("zero_count", json(0)));
        std::string type = mod.at("type").get<std::string>();
        if (type == "cyclic") {
            std::vector<Int> mult(static_cast<size_t>(k), Int(0));
            for (const auto& e : j.at("multiplicities")) {
                std::string orbit = e.at("orbit").get<std::string>();
                if (orbit.rfind("theta^", 0) != 0)
                    throw std::invalid_argument("code_from_json: cyclic orbit ids look like theta^I");
                long exp = std::stol(orbit.substr(6));
                if (exp < m - k || exp > m - 1) throw std::invalid_argument("code_from_json: orbit exponent out of range");
                mult[static_cast<size_t>(exp - (m - k))] += int_from_json(e.at("count"));
            }
            out.chain = ChainCode::cyclic(std::move(ring), k, std::move(mult), std::move(zero));
        } else if (type == "semisimple") {
            std::map<std::vector<int>, Int> mult;
            for (const auto& e : j.at("multiplicities")) {
                std::string orbit = e.at("orbit").get<std::string>();
                if (orbit.rfind("mu:", 0) != 0)
                    throw std::invalid_argument("code_from_json: semisimple orbit ids look like mu:a,b,c");
                std::vector<int> mu;
                std::string cur;
                for (char ch : orbit.substr(3)) {
                    if (ch == ',') {
                        mu.push_back(std::stoi(cur));
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                mu.push_back(std::stoi(cur));
                mult[mu] += int_from_json(e.at("count"));
            }
            out.chain = ChainCode::semisimple(std::move(ring), k, std::move(mult), std::move(zero));
        } else {
            throw std::invalid_argument("code_from_json: unknown chain module type " + type);
        }
        return out;
    }
    if (fam == "matrix") {
        long q = mod.at("q").get<long>(), k = mod.at("k").get<long>(), m = mod.at("m").get<long>();
        auto orbits = orbit_index_for(k, m, q, ord);
        std::vector<Int> mult(static_cast<size_t>(orbits->count()), Int(0));
        mult[0] = int_from_json(j.value("zero_count", json(0)));
        auto F = field(q);
        for (const auto& e : j.at("multiplicities")) {
            Subspace s = subspace_from_key(F, m, e.at("orbit").get<std::string>());
            mult[static_cast<size_t>(orbits->index_of(s))] += int_from_json(e.at("count"));
        }
        out.matrix = MatrixCode(k, m, F, orbits, std::move(mult));
        return out;
    }
    throw std::invalid_argument("code_from_json: unknown family " + fam);
}

json verdict_to_json(const Verdict& v) {
    json j;
    switch (v.kind) {
        case Verdict::Kind::Respects: j["verdict"] = "respects"; break;
        case Verdict::Kind::Fails: j["verdict"] = "fails"; break;
        case Verdict::Kind::Unknown: j["verdict"] = "unknown"; break;
    }
    j["rule"] = v.rule;
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.kind == Verdict::Kind::Fails) {
        json w;
        if (v.k > 0) w["k"] = v.k;
        if (v.s > 0) w["s"] = v.s;
        if (v.j > 0) w["j"] = v.j;
        if (v.m > 0) w["m"] = v.m;
        w["d"] = int_to_json(v.d);
        w["delta"] = v.delta.get_str();
        j["witness"] = w;
    }
    return j;
}

json chain_pair_to_json(const ChainPair& p) {
    json j;
    j["k"] = p.k;
    j["weight"] = weight_to_json(p.w);
    json a = json::array();
    for (const Int& v : p.a) a.push_back(int_to_json(v));
    j["a"] = a;
    j["delta_cap"] = int_to_json(p.delta_cap);
    j["length"] = int_to_json(p.length);
    j["C"] = code_to_json(p.C);
    j["D"] = code_to_json(p.D);
    return j;
}

json swap_pair_to_json(const SwapPair& p) {
    json j;
    j["s"] = p.s;
    j["k"] = p.k;
    j["m"] = p.m;
    j["q"] = p.q;
    j["ordering"] = p.ordering == SubspaceOrdering::Lex ? "lex" : "paper-k2m3q2";
    j["lambda0"] = p.C.orbits().at(p.lambda0_index).key();
    json xs = json::array();
    for (long t : p.x_indices) xs.push_back(p.C.orbits().at(t).key());
    j["swap_x"] = xs;
    j["swap_y"] = p.C.orbits().at(p.y_index).key();
    json sigma = json::array();
    for (const Int& v : p.sigma) sigma.push_back(int_to_json(v));
    j["sigma"] = sigma;
    j["c"] = int_to_json(p.c);
    j["a"] = int_to_json(p.a);
    j["b"] = int_to_json(p.b);
    j["Delta"] = int_to_json(p.delta);
    j["alpha_low"] = int_to_json(p.alpha_lo);
    j["alpha_high"] = int_to_json(p.alpha_hi);
    j["length"] = int_to_json(p.length);
    j["C"] = code_to_json(p.C);
    j["D"] = code_to_json(p.D);
    return j;
}

json degenerate_pair_to_json(const DegeneratePair& p) {
    json j;
    j["j"] = p.j;
    j["k"] = p.k;
    j["m"] = p.m;
    j["q"] = p.q;
    j["ordering"] = p.ordering == SubspaceOrdering::Lex ? "lex" : "paper-k2m3q2";
    j["gamma"] = p.plus.orbits().at(p.gamma_index).key();
    j["length"] = int_to_json(p.length);
    j["C"] = code_to_json(p.plus);
    j["D"] = code_to_json(p.minus);
    return j;
}

}  // namespace wdual
