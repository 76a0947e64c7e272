#ifndef ITERROOT_CLI_HPP
#define ITERROOT_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iterroot/criteria.hpp"
#include "iterroot/fixed_point.hpp"
#include "iterroot/instances.hpp"
#include "iterroot/mfn_format.hpp"
#include "iterroot/paths.hpp"
#include "iterroot/poly.hpp"
#include "iterroot/pullback.hpp"
#include "iterroot/report.hpp"
#include "iterroot/search.hpp"

namespace iterroot::cli {

// Exit codes shared by every command.
enum Exit : int { Success = 0, Negative = 1, InputError = 2, BudgetExceeded = 3 };

namespace detail {

class InputFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline MfnValue load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_mfn(text);
}

inline Multifunction as_multi(const MfnValue& v) {
    if (const auto* s = std::get_if<SingleMap>(&v)) return s->to_multifunction();
    return std::get<Multifunction>(v);
}

inline SingleMap as_single(const MfnValue& v) {
    if (const auto* s = std::get_if<SingleMap>(&v)) return *s;
    return SingleMap::from_multifunction(std::get<Multifunction>(v));
}

inline PointSet parse_labels(const GroundSet& g, const std::string& list) {
    if (list == "*") return PointSet::full(g.size());
    PointSet out(g.size());
    std::size_t pos = 0;
    while (true) {
        const auto comma = list.find(',', pos);
        const auto label = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto idx = g.find(label);
        if (!idx) throw InputFailure("undeclared label " + label);
        out.insert(*idx);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detail

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"iterroot: nonexistence of iterative roots of finite multifunctions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "iterroot 1.0.0");

    std::string file;
    bool json = false;

    // check
    auto* check_cmd = app.add_subcommand("check", "nonexistence certificates from path and point counts");
    std::optional<std::string> x0_label;
    std::uint64_t m_bound = 1;
    std::optional<std::uint64_t> n_bound;
    std::string rule = "scan";
    check_cmd->add_option("file", file, ".mfn input")->required();
    check_cmd->add_option("--x0", x0_label, "witness point label");
    check_cmd->add_option("--M", m_bound, "image bound of the root class")->check(CLI::PositiveNumber);
    check_cmd->add_option("--N", n_bound, "per-point bound (default: smallest admissible)")->check(CLI::PositiveNumber);
    check_cmd->add_option("--rule", rule)->check(
        CLI::IsMember({"forward-paths", "forward-points", "inverse-paths", "inverse-points", "scan"}));
    check_cmd->add_flag("--json", json);

    // search
    auto* search = app.add_subcommand("search", "exhaustive search for an iterative root");
    std::size_t order = 0;
    std::optional<std::size_t> max_out, max_in;
    bool total = false;
    std::uint64_t budget = 10'000'000;
    search->add_option("file", file, ".mfn input")->required();
    search->add_option("--order", order, "root order n >= 2")->required();
    auto* max_out_opt = search->add_option("--max-out", max_out, "roots with images of at most M points");
    search->add_option("--max-in", max_in, "roots with preimages of at most M points")->excludes(max_out_opt);
    search->add_flag("--total", total, "roots with Dom(G) = X");
    search->add_option("--budget", budget, "node budget")->check(CLI::PositiveNumber);
    search->add_flag("--json", json);

    auto* iter = app.add_subcommand("iterate", "n-th iterate");
    iter->add_option("file", file, ".mfn input")->required();
    iter->add_option("--order", order, "n >= 0")->required();

    auto* inv = app.add_subcommand("invert", "inverse multifunction");
    inv->add_option("file", file, ".mfn input")->required();

    auto* pull = app.add_subcommand("pullback", "map -> pullback, or multifunction -> witness map");
    pull->add_option("file", file, ".mfn input")->required();
    pull->add_flag("--json", json);

    auto* paths = app.add_subcommand("paths", "count k-paths between label sets");
    std::string from, to;
    std::size_t length = 0;
    paths->add_option("file", file, ".mfn input")->required();
    paths->add_option("--from", from, "comma-separated labels or *")->required();
    paths->add_option("--to", to, "comma-separated labels or *")->required();
    paths->add_option("--length", length, "k >= 1")->required()->check(CLI::PositiveNumber);

    auto* fixed = app.add_subcommand("fixedpoints", "fixed-point profile and order exclusions of a map");
    fixed->add_option("file", file, ".mfn input")->required();
    fixed->add_flag("--json", json);

    auto* poly = app.add_subcommand("poly", "nonexistence rules for complex polynomials");
    std::string coeffs;
    std::uint64_t poly_order = 0;
    poly->add_option("--coeffs", coeffs, "C0,C1,...,Cd as re+imi")->required();
    poly->add_option("--order", poly_order, "n >= 2")->required();
    poly->add_flag("--json", json);

    auto* solar = app.add_subcommand("solar", "degrees d for which z^d has no iterative roots");
    std::size_t count = 0;
    solar->add_option("--count", count)->required()->check(CLI::PositiveNumber);

    auto* inst = app.add_subcommand("instance", "emit a built-in instance as .mfn");
    instances::InstanceSpec spec;
    inst->add_option("name", spec.name)->required()->check(
        CLI::IsMember({"f1", "f2", "tails20-f", "tails20-g", "cyclic-power", "random-mf", "random-map"}));
    inst->add_option("--depth", spec.depth);
    inst->add_option("--size", spec.size);
    inst->add_option("--seed", spec.seed);
    inst->add_option("--modulus", spec.modulus);
    inst->add_option("--exponent", spec.exponent);
    inst->add_option("--variant", spec.variant)->check(CLI::IsMember({"add", "mul"}));
    inst->add_option("--max-out", spec.max_out_degree);
    inst->add_option("--density", spec.density);
    inst->add_flag("--surjective", spec.surjective);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : InputError;
    }

    try {
        if (check_cmd->parsed()) {
            const auto f = detail::as_multi(detail::load(file));
            std::optional<std::size_t> x0;
            if (x0_label) {
                x0 = f.ground().find(*x0_label);
                if (!x0) throw detail::InputFailure("undeclared label " + *x0_label);
            }
            std::vector<Rule> rules;
            if (rule == "scan")
                rules.assign(std::begin(all_rules), std::end(all_rules));
            else
                rules.push_back(parse_rule(rule));
            // A single (rule, x0) pair reports its certificate either way;
            // otherwise only firing certificates are listed.
            const bool single_query = rule != "scan" && x0.has_value();
            std::vector<Certificate> shown;
            bool any = false;
            for (auto r : rules)
                for (std::size_t x = 0; x < f.size(); ++x) {
                    if (x0 && x != *x0) continue;
                    auto c = iterroot::check(f, r, x, m_bound, n_bound.value_or(minimal_n(f, r, x)));
                    any = any || c.fires();
                    if (c.fires() || single_query) shown.push_back(std::move(c));
                }
            if (json) {
                Json certs = Json::array();
                for (const auto& c : shown) certs.push_back(to_json(c, f.ground()));
                out << detail::dump(Json{{"fires", any}, {"certificates", certs}});
            } else {
                for (const auto& c : shown) out << render_text(c, f.ground());
                if (shown.empty()) out << "no certificate fires\n";
            }
            return any ? Success : Negative;
        }

        if (search->parsed()) {
            const auto v = detail::load(file);
            if (const auto* s = std::get_if<SingleMap>(&v)) {
                if (max_out || max_in || total)
                    throw detail::InputFailure("class options apply to multifunction inputs only");
                const auto r = find_single_root(*s, order, budget);
                out << (json ? detail::dump(to_json(r)) : render_text(r));
                return r.found() ? Success : r.exhausted() ? Negative : BudgetExceeded;
            }
            const auto c = max_out ? RootConstraint::max_out(*max_out, total)
                           : max_in ? RootConstraint::max_in(*max_in, total)
                                    : RootConstraint::unconstrained(total);
            const auto r = find_multi_root(std::get<Multifunction>(v), order, c, budget);
            out << (json ? detail::dump(to_json(r)) : render_text(r));
            return r.found() ? Success : r.exhausted() ? Negative : BudgetExceeded;
        }

        if (iter->parsed()) {
            const auto v = detail::load(file);
            if (const auto* s = std::get_if<SingleMap>(&v))
                out << serialize(iterate(*s, order));
            else
                out << serialize(iterate(std::get<Multifunction>(v), order));
            return Success;
        }

        if (inv->parsed()) {
            out << serialize(invert(detail::as_multi(detail::load(file))));
            return Success;
        }

        if (pull->parsed()) {
            const auto v = detail::load(file);
            if (const auto* s = std::get_if<SingleMap>(&v)) {
                const auto p = pullback_of(*s);
                out << (json ? detail::dump(Json{{"pullback", serialize(p)}}) : serialize(p));
                return Success;
            }
            const auto w = is_pullback(std::get<Multifunction>(v));
            if (json) {
                out << detail::dump(to_json(w));
            } else if (w.is_pullback) {
                out << serialize(*w.witness_map);
            } else {
                out << "# not a pullback: fails";
                for (auto c : w.failed_conditions) out << " " << condition_name(c);
                out << "\n";
            }
            return w.is_pullback ? Success : Negative;
        }

        if (paths->parsed()) {
            const auto f = detail::as_multi(detail::load(file));
            out << count_paths(f, detail::parse_labels(f.ground(), from), detail::parse_labels(f.ground(), to), length)
                       .str()
                << "\n";
            return Success;
        }

        if (fixed->parsed()) {
            const auto f = detail::as_single(detail::load(file));
            out << (json ? detail::dump(fixed_point_json(f)) : fixed_point_text(f));
            return Success;
        }

        if (poly->parsed()) {
            const auto advice = advise(parse_coefficients(coeffs), poly_order);
            out << (json ? detail::dump(to_json(advice)) : render_text(advice));
            return Success;
        }

        if (solar->parsed()) {
            const auto list = first_solar(count);
            for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i];
            out << "\n";
            return Success;
        }

        if (inst->parsed()) {
            out << serialize(instances::build(spec));
            return Success;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }
    return InputError;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace iterroot::cli

#endif
