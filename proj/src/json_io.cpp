#include "extop/json_io.hpp"

#include <fstream>
#include <sstream>

namespace extop {

namespace {

Json subset_to_json(const Subset& s) {
    Json arr = Json::array();
    for (int e : s.members()) arr.push_back(e);
    return arr;
}

Subset subset_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("subset: expected an index array");
    Subset out;
    int prev = -1;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument("subset: indices must be integers");
        int v = e.get<int>();
        if (v <= prev)
            throw std::invalid_argument("subset: index list must be strictly increasing");
        out = out.with(v);
        prev = v;
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing key '") + key + "'");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(key) + ": expected integer");
    return v.get<int>();
}

}  // namespace

Json measure_to_json(const SignedMeasure& mu) {
    Json arr = Json::array();
    for (const auto& [atom, c] : mu.atoms())
        arr.push_back(Json{{"atom", subset_to_json(atom)}, {"coeff", c.to_string()}});
    return arr;
}

SignedMeasure measure_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("measure: expected an array of atoms");
    SignedMeasure mu;
    for (const auto& item : j)
        mu.add(subset_from_json(require(item, "atom")), rational_from_json(require(item, "coeff")));
    return mu;
}

Json kernel_to_json(const ExtensionKernel& k) {
    Json entries = Json::array();
    for (const auto& [point, mu] : k.entries())
        entries.push_back(Json{{"point", subset_to_json(point)}, {"measure", measure_to_json(mu)}});
    return Json{{"ground_size", k.ground_size()},
                {"m", k.m()},
                {"n", k.n()},
                {"entries", std::move(entries)}};
}

ExtensionKernel kernel_from_json(const Json& j) {
    ExtensionKernel k(require_int(j, "ground_size"), require_int(j, "m"), require_int(j, "n"));
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("kernel: entries must be an array");
    for (const auto& item : entries) {
        SignedMeasure mu = measure_from_json(require(item, "measure"));
        for (const auto& [atom, c] : mu.atoms())
            if (!k.ground().holds(atom))
                throw std::invalid_argument("kernel: atom outside the ground set");
        k.set_entry(subset_from_json(require(item, "point")), std::move(mu));
    }
    return k;
}

Json order_family_to_json(const BetaOrderFamily& fam) {
    Json orders = Json::array();
    for (const auto& ord : fam.orders) orders.push_back(ord);
    return Json{{"orders", std::move(orders)},
                {"mode", to_string(fam.mode)},
                {"seed", fam.seed}};
}

BetaOrderFamily order_family_from_json(const Json& j) {
    BetaOrderFamily fam;
    fam.mode = order_mode_from_string(require(j, "mode").get<std::string>());
    fam.seed = require(j, "seed").get<std::uint64_t>();
    const Json& orders = require(j, "orders");
    if (!orders.is_array()) throw std::invalid_argument("order family: orders must be an array");
    fam.ground_size = static_cast<int>(orders.size());
    for (std::size_t beta = 0; beta < orders.size(); ++beta) {
        std::vector<int> ord = orders[beta].get<std::vector<int>>();
        if (static_cast<int>(ord.size()) != static_cast<int>(beta))
            throw std::invalid_argument("order family: order below beta must list beta elements");
        std::vector<bool> seen(beta, false);
        for (int x : ord) {
            if (x < 0 || x >= static_cast<int>(beta) || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("order family: not a permutation of {0..beta-1}");
            seen[static_cast<std::size_t>(x)] = true;
        }
        fam.orders.push_back(std::move(ord));
    }
    return fam;
}

Json set_map_to_json(const SetValuedMap& s) {
    if (!s.is_table())
        throw std::invalid_argument("set map: only table-backed maps serialize");
    Json entries = Json::array();
    for (const auto& [in, out] : s.table())
        entries.push_back(Json{{"in", subset_to_json(in)}, {"out", subset_to_json(out)}});
    return Json{{"entries", std::move(entries)}};
}

SetValuedMap set_map_from_json(const Json& j) {
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("set map: entries must be an array");
    SetValuedMap::Table table;
    for (const auto& item : entries) {
        Subset in = subset_from_json(require(item, "in"));
        Subset out = subset_from_json(require(item, "out"));
        if (out.empty()) continue;  // empty images are the default
        table[in] = out;
    }
    return SetValuedMap::from_table(std::move(table));
}

Json ball_point_to_json(const BallPoint& z) {
    Json obj = Json::object();
    for (const auto& [i, x] : z.coords) obj[std::to_string(i)] = x.to_string();
    return obj;
}

BallPoint ball_point_from_json(const Json& j, const Rational& lambda) {
    if (!j.is_object()) throw std::invalid_argument("ball point: expected index->coeff object");
    SparseVector c;
    for (const auto& [key, val] : j.items()) {
        std::size_t used = 0;
        int idx = std::stoi(key, &used);
        if (used != key.size() || idx < 0)
            throw std::invalid_argument("ball point: bad coordinate index '" + key + "'");
        c[idx] = rational_from_json(val);
    }
    return BallPoint(std::move(c), lambda);
}

Json stub_to_json(const BallKernelStub& stub) {
    Json entries = Json::array();
    for (const auto& [point, measure] : stub.entries) {
        Json meas = Json::array();
        for (const auto& [bp, coeff] : measure)
            meas.push_back(Json{{"ball_point", ball_point_to_json(bp)},
                                {"coeff", coeff.to_string()}});
        entries.push_back(Json{{"point_subset", subset_to_json(point)}, {"measure", std::move(meas)}});
    }
    return Json{{"mu", stub.mu.to_string()},
                {"m", stub.m},
                {"k", stub.k},
                {"entries", std::move(entries)}};
}

BallKernelStub stub_from_json(const Json& j) {
    BallKernelStub stub;
    stub.mu = rational_from_json(require(j, "mu"));
    stub.m = require_int(j, "m");
    stub.k = require_int(j, "k");
    const Json& entries = require(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("stub: entries must be an array");
    int max_index = -1;
    for (const auto& item : entries) {
        Subset point = subset_from_json(require(item, "point_subset"));
        if (!point.empty()) max_index = std::max(max_index, point.max_element());
        BallKernelStub::Entry entry;
        const Json& meas = require(item, "measure");
        if (!meas.is_array()) throw std::invalid_argument("stub: measure must be an array");
        for (const auto& atom : meas) {
            BallPoint bp = ball_point_from_json(require(atom, "ball_point"), Rational(1));
            if (!bp.coords.empty()) max_index = std::max(max_index, bp.coords.rbegin()->first);
            Rational coeff = rational_from_json(require(atom, "coeff"));
            if (!coeff.is_zero()) entry.emplace_back(std::move(bp), std::move(coeff));
        }
        stub.entries[point] = std::move(entry);
    }
    stub.ground_size = max_index + 1;
    return stub;
}

Json identity_reports_to_json(const std::vector<IdentityReport>& reports) {
    Json arr = Json::array();
    for (const auto& rep : reports) {
        Json cex = Json::array();
        for (const auto& c : rep.counterexamples)
            cex.push_back(Json{{"params", c.params}, {"got", c.got}, {"expected", c.expected}});
        arr.push_back(Json{{"name", rep.name},
                           {"cases_checked", rep.cases_checked},
                           {"counterexamples", std::move(cex)}});
    }
    return arr;
}

Json naturality_to_json(const NaturalitySystem& sys) {
    return Json{{"m", sys.m},
                {"n", sys.n},
                {"pmax", sys.pmax},
                {"unknowns", static_cast<int>(sys.unknowns.size())},
                {"equations", sys.equation_count},
                {"dim", sys.solution_dim},
                {"contains_canonical", sys.contains_canonical}};
}

Json certificate_to_json(const LowerBoundCertificate& cert) {
    Json regions = Json::array();
    for (const auto& r : cert.regions) {
        Json obj{{"kind", r.kind},
                 {"window", subset_to_json(r.window)},
                 {"mass", r.mass.to_string()}};
        if (r.kind == "cylinder")
            obj["excluded"] = Json::array({subset_to_json(r.excluded_lo),
                                           subset_to_json(r.excluded_hi)});
        regions.push_back(std::move(obj));
    }
    return Json{{"z", cert.z.z},
                {"epsilon_prime", cert.epsilon_prime.to_string()},
                {"mu", measure_to_json(cert.mu)},
                {"regions", std::move(regions)},
                {"regions_disjoint", cert.regions_disjoint},
                {"partition_bound", cert.partition_bound.to_string()},
                {"certified_bound", cert.certified_bound.to_string()},
                {"tv_norm", cert.tv.to_string()}};
}

Json chain_report_to_json(const ChainNormReport& rep) {
    Json j{{"norm", rep.norm.to_string()}, {"bound", rep.bound}};
    if (rep.attained)
        j["witness"] = subset_to_json(rep.witness);
    else
        j["witness"] = nullptr;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << text;
}

bool roundtrip_file(const std::string& path, std::string& canonical_out) {
    Json parsed = Json::parse(read_text_file(path));
    auto canonicalize = [](const Json& j) -> Json {
        if (j.is_object() && j.contains("ground_size")) return kernel_to_json(kernel_from_json(j));
        if (j.is_object() && j.contains("orders"))
            return order_family_to_json(order_family_from_json(j));
        if (j.is_object() && j.contains("mu") && j.contains("k"))
            return stub_to_json(stub_from_json(j));
        if (j.is_object() && j.contains("entries")) return set_map_to_json(set_map_from_json(j));
        throw std::invalid_argument("roundtrip: unrecognized artifact shape");
    };
    Json once = canonicalize(parsed);
    std::string text_once = once.dump(2);
    Json twice = canonicalize(Json::parse(text_once));
    canonical_out = text_once;
    return twice.dump(2) == text_once;
}

}  // namespace extop
