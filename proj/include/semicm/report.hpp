#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "buchsbaum.hpp"
#include "lifting.hpp"
#include "projective.hpp"
#include "semigroup.hpp"

namespace semicm {

using Json = nlohmann::ordered_json;

// All integers are serialized as decimal strings so no consumer ever rounds
// them.
inline Json json_int(const Int& x) { return Json(x.str()); }

inline Json json_vec(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

inline Json json_vecs(const std::vector<IntVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(json_vec(v));
    return a;
}

inline Json json_polys(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(render(p, names));
    return a;
}

inline Json json_monomials(const std::vector<Monomial>& ms, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(render(m, names));
    return a;
}

inline Json json_order(const MonomialOrder& o, const std::vector<std::string>& names) {
    Json a = Json::array();
    for (std::size_t v : o.ranking) a.push_back(names[v]);
    return a;
}

inline Json semigroup_section(const AffineSemigroup& s, bool simplicial,
                              const std::vector<std::size_t>& redundant) {
    Json j;
    j["dim"] = s.dim;
    j["simplicial"] = simplicial;
    if (s.extremal) {
        Json idx = Json::array();
        for (std::size_t i : *s.extremal) idx.push_back(i + 1);
        j["extremal_indices"] = idx;
        j["extremal_rays"] = json_vecs(s.extremal_generators());
    }
    j["minimal_generating_set"] = redundant.empty();
    if (!redundant.empty()) {
        Json idx = Json::array();
        for (std::size_t i : redundant) idx.push_back(i + 1);
        j["redundant_generators"] = idx;
    }
    return j;
}

inline Json ideal_section(const GroebnerBasis& gb, const MinimalGenerators& min,
                          const std::vector<std::string>& names) {
    Json j;
    j["variables"] = names;
    j["order"] = json_order(gb.order, names);
    j["mu"] = min.mu;
    j["minimal_generators"] = json_polys(min.gens, names);
    j["groebner_basis"] = json_polys(gb.elements, names);
    j["initial_ideal"] = json_monomials(initial_ideal_min_gens(gb), names);
    return j;
}

inline Json cm_section(const CMReport& rep) {
    Json j;
    if (rep.cm_affine)
        j["affine"] = *rep.cm_affine;
    else
        j["affine"] = "not applicable (dim 1: the affine ring is always Cohen-Macaulay)";
    j["projective"] = rep.cm_projective;
    if (rep.witness) j["witness"] = *rep.witness;
    j["initial_generators_match"] = true;  // asserted inside is_cohen_macaulay
    if (rep.curve_gb) {
        j["closure_variables"] = rep.curve->names;
        j["closure_groebner_basis"] = json_polys(rep.curve_gb->elements, rep.curve->names);
        j["closure_initial_ideal"] =
            json_monomials(initial_ideal_min_gens(*rep.curve_gb), rep.curve->names);
    }
    return j;
}

inline Json apery_section(const AperySet& ap, const QuasiFrobenius& qf,
                          const std::vector<IntVec>& extremal) {
    Json j;
    j["extremal_set"] = json_vecs(extremal);
    j["elements"] = json_vecs(ap.elements);
    j["maximal"] = json_vecs(ap.maximal);
    j["quasi_frobenius"] = json_vecs(qf.elements);
    j["type"] = qf.type;
    return j;
}

inline Json closure_section(const CMReport& rep) {
    Json j;
    j["apery"] = json_vecs(rep.apery_gh->elements);
    j["apery_maximal"] = json_vecs(rep.apery_gh->maximal);
    j["cm_type"] = *rep.cm_type;
    return j;
}

inline Json buchsbaum_section(const BuchsbaumReport& rep) {
    Json j;
    j["cm"] = rep.cm;
    if (rep.buchsbaum)
        j["buchsbaum"] = *rep.buchsbaum;
    else
        j["buchsbaum"] = "not applicable (closure is Cohen-Macaulay)";
    if (rep.witness) j["witness"] = *rep.witness;
    if (rep.tstar) {
        j["t_star_generators"] = json_vecs(rep.tstar->generators);
        j["t_star_interior_count"] = rep.tstar->interior_count;
        j["t_star_box_bound"] = rep.tstar->box_bound;
        j["t_star_variables"] = rep.tstar_names;
        j["t_star_groebner_basis"] = json_polys(rep.tstar_gb->elements, rep.tstar_names);
        j["t_star_initial_ideal"] =
            json_monomials(initial_ideal_min_gens(*rep.tstar_gb), rep.tstar_names);
    }
    j["notes"] = rep.notes;
    return j;
}

inline Json lifting_section(const LiftReport& rep) {
    Json j;
    j["k"] = json_int(rep.k);
    j["lifted_generators"] = json_vecs(rep.lifted.generators);
    j["mu_base"] = rep.mu_base;
    j["mu_lifted"] = rep.mu_lifted;
    j["mu_equal"] = rep.mu_equal;
    const auto names = variable_names(rep.base.ngens(), "z");
    j["lifted_binomials"] = json_polys(rep.lifted_generators, names);
    j["lifted_binomials_in_ideal"] = rep.lifted_generators_in_ideal;
    j["flat"] = rep.flat;
    if (rep.cm_base) j["cm_base"] = *rep.cm_base;
    if (rep.cm_lifted) j["cm_lifted"] = *rep.cm_lifted;
    j["cm_implication_ok"] = rep.cm_implication_ok;
    if (rep.apery_size_equal) {
        j["apery_size_equal"] = *rep.apery_size_equal;
        j["apery_scaled"] = *rep.apery_scaled;
        j["apery_base"] = json_vecs(rep.apery_base->elements);
        j["apery_lifted"] = json_vecs(rep.apery_lifted->elements);
    }
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline Json betti_section(const BettiTable& t) {
    Json j;
    j["degree_bound"] = t.bound;
    Json totals = Json::array();
    std::size_t top = t.totals.size();
    while (top > 1 && t.totals[top - 1] == 0) --top;
    for (std::size_t i = 0; i < top; ++i) totals.push_back(t.totals[i]);
    j["totals"] = totals;
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json row;
        row["i"] = e.index;
        row["degree"] = json_vec(e.degree);
        row["rank"] = e.rank;
        entries.push_back(row);
    }
    j["table"] = entries;
    return j;
}

// ---- plain-text rendering ----------------------------------------------------

inline void render_text(const Json& j, std::string& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                out += prefix + key + ":\n";
                render_text(value, out, prefix + "  ");
            } else {
                out += prefix + key + ": ";
                if (value.is_array()) {
                    for (std::size_t i = 0; i < value.size(); ++i) {
                        if (i) out += ", ";
                        out += value[i].is_string() ? value[i].get<std::string>()
                                                    : value[i].dump();
                    }
                    if (value.empty()) out += "(none)";
                } else {
                    out += value.is_string() ? value.get<std::string>() : value.dump();
                }
                out += "\n";
            }
        }
    } else if (j.is_array()) {
        std::size_t row = 0;
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out += prefix + "- ";
                std::string inner;
                render_text(value, inner, "");
                // inline a flat row, indent a nested one
                if (inner.find('\n') == inner.size() - 1 || value.is_array()) {
                    std::string flat = value.dump();
                    out += flat + "\n";
                } else {
                    out += "[" + std::to_string(row) + "]\n";
                    render_text(value, out, prefix + "  ");
                }
            } else {
                out += prefix + "- " +
                       (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
            }
            ++row;
        }
    }
}

inline std::string render_text(const Json& j) {
    std::string out;
    render_text(j, out);
    return out;
}

}  // namespace semicm
