#ifndef ITERROOT_REPORT_HPP
#define ITERROOT_REPORT_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iterroot/criteria.hpp"
#include "iterroot/fixed_point.hpp"
#include "iterroot/mfn_format.hpp"
#include "iterroot/poly.hpp"
#include "iterroot/pullback.hpp"
#include "iterroot/search.hpp"

namespace iterroot {

// Structured reports. Keys keep insertion order so output is byte-stable;
// big integers are decimal strings.
using Json = nlohmann::ordered_json;

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline Json to_json(const Certificate& c, const GroundSet& ground) {
    Json j;
    j["rule"] = std::string(rule_name(c.rule));
    j["citation"] = std::string(rule_citation(c.rule));
    j["x0"] = ground.label(c.x0);
    j["M"] = c.m;
    j["N"] = c.n;
    j["Q"] = c.measured_q.str();
    j["MN3"] = c.bound().str();
    j["N_max"] = c.measured_n_max.str();
    j["root_class"] = std::string(root_class_name(c.root_class()));
    j["conclusion"] = std::string(conclusion_name(c.conclusion));
    j["hypotheses"] = {
        {"totality", c.checklist.totality},
        {"x0_not_fixed", c.checklist.x0_not_fixed},
        {"Q_exceeds_MN3", c.checklist.q_exceeds_mn3},
        {"N_bound_holds", c.checklist.n_bound_holds},
        {"class_membership", c.checklist.class_membership},
        {"surjectivity_or_totality_extra", c.checklist.surjectivity_or_totality_extra},
    };
    j["failed_hypotheses"] = c.failed_hypotheses();
    return j;
}

inline std::string render_text(const Certificate& c, const GroundSet& ground) {
    std::string s = std::string(rule_name(c.rule)) + " x0=" + ground.label(c.x0) + " M=" + std::to_string(c.m) +
                    " N=" + std::to_string(c.n) + " Q=" + c.measured_q.str() + " MN^3=" + c.bound().str() +
                    " N_max=" + c.measured_n_max.str() + " -> " + std::string(conclusion_name(c.conclusion));
    if (c.conclusion == Conclusion::NoRootsInClass) s += " (" + std::string(root_class_name(c.root_class())) + " " + std::to_string(c.m) + ")";
    s += "\n";
    if (c.fires()) {
        s += "  " + std::string(rule_citation(c.rule)) + "\n";
    } else {
        s += "  failed:";
        for (const auto& h : c.failed_hypotheses()) s += " " + h;
        s += "\n";
    }
    return s;
}

template <class Root>
Json to_json(const SearchResult<Root>& r) {
    Json j;
    j["order"] = r.order;
    j["constraint"] = r.constraint.describe();
    if (r.found()) {
        j["outcome"] = "witness";
        j["witness"] = serialize(r.witness());
    } else if (r.exhausted()) {
        j["outcome"] = "exhausted-none";
        j["nodes_explored"] = std::to_string(r.nodes_explored());
    } else {
        j["outcome"] = "budget-exceeded";
        j["budget"] = std::to_string(std::get<typename SearchResult<Root>::BudgetExceeded>(r.outcome).budget);
    }
    return j;
}

template <class Root>
std::string render_text(const SearchResult<Root>& r) {
    if (r.found()) return serialize(r.witness());
    if (r.exhausted())
        return "# no root of order " + std::to_string(r.order) + " (" + r.constraint.describe() + "); " +
               std::to_string(r.nodes_explored()) + " nodes explored\n";
    return "# budget of " +
           std::to_string(std::get<typename SearchResult<Root>::BudgetExceeded>(r.outcome).budget) +
           " nodes exceeded; undecided\n";
}

inline Json to_json(const std::optional<OrderExclusion>& e) {
    if (!e) return Json{{"applies", false}};
    Json j{{"applies", true}, {"source", e->source}, {"excludes_above", e->lower_bound}};
    if (e->forbidden_divisor_max) j["no_divisor_in_2_to"] = *e->forbidden_divisor_max;
    return j;
}

inline std::string describe(const OrderExclusion& e) {
    std::string s = "n > " + std::to_string(e.lower_bound);
    if (e.forbidden_divisor_max) s += " with no divisor in [2, " + std::to_string(*e.forbidden_divisor_max) + "]";
    return s;
}

inline Json fixed_point_json(const SingleMap& f) {
    const auto p = fixed_point_profile(f);
    Json fps = Json::array();
    for (const auto& fp : p.fixed_points) {
        Json tail = Json::array();
        Json pre = Json::array();
        std::size_t i = 0;
        for (auto y : fp.tail) {
            tail.push_back(f.ground().label(y));
            pre.push_back(fp.tail_has_preimage[i++]);
        }
        fps.push_back({{"point", f.ground().label(fp.point)}, {"isolated", fp.isolated}, {"tail", tail},
                       {"tail_has_preimage", pre}});
    }
    return Json{{"fixed_points", fps},
                {"tail_union_size", p.tail_union_size},
                {"rice_exclusion", to_json(rice_exclusion(f))},
                {"non_isolated_exclusion", to_json(non_isolated_exclusion(f))}};
}

inline std::string fixed_point_text(const SingleMap& f) {
    const auto p = fixed_point_profile(f);
    std::string s;
    for (const auto& fp : p.fixed_points) {
        s += "fixed " + f.ground().label(fp.point) + (fp.isolated ? " isolated" : " tail");
        for (auto y : fp.tail) s += " " + f.ground().label(y);
        s += "\n";
    }
    if (p.fixed_points.empty()) s += "no fixed points\n";
    s += "tail union size " + std::to_string(p.tail_union_size) + "\n";
    const auto rice = rice_exclusion(f);
    s += "rice-lemma: " + (rice ? "excludes " + describe(*rice) : std::string("not applicable")) + "\n";
    const auto nif = non_isolated_exclusion(f);
    s += "non-isolated-fixed-points: " + (nif ? "excludes " + describe(*nif) : std::string("not applicable")) + "\n";
    return s;
}

inline Json to_json(const PolyAdvice& a) {
    Json findings = Json::array();
    for (const auto& f : a.findings) {
        Json j;
        j["rule"] = std::string(poly_rule_name(f.rule));
        j["citation"] = std::string(poly_rule_citation(f.rule));
        j["hypotheses_hold"] = f.hypotheses_hold;
        j["applicable"] = f.applicable;
        j["excluded_orders"] = f.excluded.describe();
        j["tolerance"] = f.tolerance ? Json(format_double(*f.tolerance)) : Json(nullptr);
        j["note"] = f.note;
        findings.push_back(std::move(j));
    }
    return Json{{"degree", a.degree}, {"order", a.order}, {"excluded", !a.fired().empty()}, {"findings", findings}};
}

inline std::string render_text(const PolyAdvice& a) {
    std::string s = "degree " + std::to_string(a.degree) + ", order " + std::to_string(a.order) + "\n";
    const auto fired = a.fired();
    if (fired.empty()) return s + "no findings\n";
    for (const auto& f : fired) {
        s += std::string(poly_rule_name(f.rule)) + ": no roots for " + f.excluded.describe();
        if (f.tolerance) s += " (tolerance " + format_double(*f.tolerance) + ")";
        s += "\n  " + std::string(poly_rule_citation(f.rule)) + "\n";
    }
    return s;
}

inline Json to_json(const PullbackWitness& w) {
    Json failed = Json::array();
    for (auto c : w.failed_conditions) failed.push_back(std::string(condition_name(c)));
    Json j{{"is_pullback", w.is_pullback}, {"failed_conditions", failed}};
    if (w.witness_map) j["witness_map"] = serialize(*w.witness_map);
    return j;
}

} // namespace iterroot

#endif
