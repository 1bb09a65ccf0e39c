#include "lapspec/report.hpp"

namespace lapspec {

using nlohmann::json;

GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    s.n = g.n;
    s.e = g.num_edges();
    s.components = connected_components(g).count;
    s.d_max = g.d_max();
    return s;
}

json to_json(const Rational& r) {
    return json{{"num", to_int64(r.num)}, {"den", to_int64(r.den)}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
    throw std::invalid_argument("rational must be an integer or a {num, den} object");
}

json to_json(const GraphSummary& s) {
    return json{{"n", s.n}, {"e", s.e}, {"components", s.components}, {"d_max", s.d_max}};
}

json census_to_json(const StructuralCensus& c) {
    json j;
    j["n"] = c.n;
    json s = json::array();
    for (const int128& v : c.S) s.push_back(to_int64(v));
    j["S"] = s;
    j["Delta"] = to_int64(c.Delta);
    j["Q"] = to_int64(c.Q);
    j["P"] = to_int64(c.P);
    if (!c.t.empty()) j["t"] = c.t;
    if (!c.q.empty()) j["q"] = c.q;
    if (!c.p.empty()) j["p"] = c.p;
    j["corr"] = json{{"C_dd", to_json(c.corr.C_dd)},   {"C_d2d", to_json(c.corr.C_d2d)},
                     {"C_dt", to_json(c.corr.C_dt)},   {"C_d2t", to_json(c.corr.C_d2t)},
                     {"C_dq", to_json(c.corr.C_dq)},   {"D_dd", to_json(c.corr.D_dd)}};
    return j;
}

StructuralCensus census_from_json(const json& j) {
    StructuralCensus c;
    c.n = j.at("n").get<int>();
    if (c.n < 1) throw std::invalid_argument("census node count must be >= 1");
    for (const auto& v : j.at("S")) c.S.push_back(v.get<std::int64_t>());
    if (c.S.size() != 5) throw std::invalid_argument("census must list S_1..S_5");
    c.Delta = j.at("Delta").get<std::int64_t>();
    c.Q = j.at("Q").get<std::int64_t>();
    c.P = j.at("P").get<std::int64_t>();
    if (j.contains("t")) c.t = j.at("t").get<std::vector<std::int64_t>>();
    if (j.contains("q")) c.q = j.at("q").get<std::vector<std::int64_t>>();
    if (j.contains("p")) c.p = j.at("p").get<std::vector<std::int64_t>>();
    const auto& corr = j.at("corr");
    c.corr.C_dd = rational_from_json(corr.at("C_dd"));
    c.corr.C_d2d = rational_from_json(corr.at("C_d2d"));
    c.corr.C_dt = rational_from_json(corr.at("C_dt"));
    c.corr.C_d2t = rational_from_json(corr.at("C_d2t"));
    c.corr.C_dq = rational_from_json(corr.at("C_dq"));
    c.corr.D_dd = rational_from_json(corr.at("D_dd"));
    return c;
}

json moments_to_json(const MomentSequence& ms) {
    json j;
    j["n"] = ms.n;
    json m = json::array(), mbar = json::array();
    for (const Rational& v : ms.m) m.push_back(to_json(v));
    if (ms.n >= 2)
        for (const Rational& v : ms.scaled()) mbar.push_back(to_json(v));
    j["moments"] = m;
    j["scaled"] = mbar;
    return j;
}

json bound_result_to_json(const BoundResult& br) {
    json j;
    j["s"] = br.s;
    j["alpha"] = br.alpha;
    j["beta"] = br.beta;
    j["tol"] = br.tol;
    if (br.lambda2) j["lambda2"] = *br.lambda2;
    if (br.lambdaN) j["lambdaN"] = *br.lambdaN;
    j["warnings"] = br.warnings;
    j["iterations"] = json{{"alpha", br.alpha_iterations}, {"beta", br.beta_iterations}};
    j["brackets"] = json{{"alpha", {br.alpha_bracket[0], br.alpha_bracket[1]}},
                         {"beta", {br.beta_bracket[0], br.beta_bracket[1]}}};
    if (br.alpha_eig) {
        j["crosscheck"] = json{{"alpha", *br.alpha_eig},
                               {"beta", *br.beta_eig},
                               {"ok", br.crosscheck_ok}};
    }
    return j;
}

}  // namespace lapspec
