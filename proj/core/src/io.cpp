#include "cmsdef/io.hpp"

#include <json.hpp>
#include <sstream>

namespace cmsdef {

using nlohmann::json;

std::string to_text(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << " * x" << i + 1;
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {
json laurent_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exp", e}, {"coeff", c.str()}});
    return json{{"dims", {f.n(), f.m()}}, {"terms", terms}};
}
} // namespace

std::string to_json(const LaurentPoly& f) {
    return laurent_json(f).dump();
}

LaurentPoly laurent_from_json(const std::string& s) {
    json j = json::parse(s);
    LaurentPoly f(j.at("dims").at(0).get<int>(), j.at("dims").at(1).get<int>());
    for (const auto& t : j.at("terms"))
        f.add_term(t.at("exp").get<Exponent>(), RatK::parse(t.at("coeff").get<std::string>()));
    return f;
}

std::string to_json(const EqClassReport& rep) {
    json members = json::array();
    for (const auto& w : rep.members) members.push_back(w.str());
    json gamma = json::array();
    for (const auto& [p, q] : rep.gamma_endpoints)
        gamma.push_back({{"P", {p.first, p.second}}, {"Q", {q.first, q.second}}});
    json nu = json::array();
    for (const auto& c : rep.nu) {
        json cells = json::array();
        for (const auto& s : c.cells) cells.push_back({s.first, s.second});
        json roots = json::array();
        for (const auto& a : c.roots) roots.push_back({a.i + 1, a.j + 1});  // 1-based
        nu.push_back({{"cells", cells}, {"roots", roots}, {"beta", c.beta}});
    }
    json j{{"chi", rep.chi.str()},
           {"chi_min", rep.chi_min.str()},
           {"r", rep.r},
           {"class_size", rep.members.size()},
           {"members", members},
           {"gamma_endpoints", gamma},
           {"nu_components", nu}};
    return j.dump();
}

std::string to_json(const KMat& mat) {
    json rows = json::array();
    for (const auto& row : mat) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(r);
    }
    return rows.dump();
}

std::string to_json(const LocalAlgebraReport& rep, int json_indent) {
    json gens = json::array();
    for (const auto& g : rep.square_zero_generators) gens.push_back(json::parse(to_json(g)));
    json cyc = json::array();
    for (const auto& x : rep.cyclic_vector) cyc.push_back(x.str());
    json j{{"r", rep.r},
           {"dimension", rep.dimension},
           {"nilpotency_index", rep.nilpotency_index},
           {"cotangent_dim", rep.cotangent_dim},
           {"commutative", rep.commutative},
           {"local_structure_ok", rep.local_structure_ok},
           {"square_zero_generators", gens},
           {"square_free_basis_ok", rep.square_free_basis_ok},
           {"cyclic_vector", cyc},
           {"regular_representation_ok", rep.regular_representation_ok},
           {"isomorphism_witness", rep.isomorphism_witness}};
    return j.dump(json_indent);
}

std::string bipartition_to_json(const Partition& lam, const Partition& mu) {
    return json{{"lambda", lam}, {"mu", mu}}.dump();
}

std::pair<Partition, Partition> bipartition_from_json(const std::string& s) {
    json j = json::parse(s);
    return {j.at("lambda").get<Partition>(), j.at("mu").get<Partition>()};
}

} // namespace cmsdef
