#ifndef ITERROOT_MFN_FORMAT_HPP
#define ITERROOT_MFN_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "iterroot/multifunction.hpp"

namespace iterroot {

// .mfn text format
//
//   # comment
//   points a b c
//   kind single            (optional; every point then needs exactly one target)
//   a -> b c
//   b ->                   (empty image; same as omitting the line)
//
// Serialisation is canonical: declaration order for sources and targets,
// empty images omitted for multifunctions, every line terminated by LF.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using MfnValue = std::variant<Multifunction, SingleMap>;

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

} // namespace detail

inline MfnValue parse_mfn(std::string_view text) {
    std::optional<GroundSet> ground;
    bool single = false;
    bool seen_edge = false;
    std::size_t kind_line = 0;
    std::size_t last_line = 0;
    std::vector<PointSet> images;
    std::vector<bool> has_line;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = detail::split_tokens(line);
        if (tok.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        last_line = line_no;

        if (!ground) {
            if (tok[0] != "points") throw ParseError("expected 'points' declaration", line_no);
            if (tok.size() < 2) throw ParseError("empty point declaration", line_no);
            std::vector<std::string> labels;
            std::unordered_set<std::string_view> seen;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!seen.insert(tok[i]).second)
                    throw ParseError("duplicate label " + std::string(tok[i]), line_no);
                if (!is_valid_label(tok[i])) throw ParseError("invalid label " + std::string(tok[i]), line_no);
                labels.emplace_back(tok[i]);
            }
            ground.emplace(std::move(labels));
            images.assign(ground->size(), PointSet(ground->size()));
            has_line.assign(ground->size(), false);
        } else if (tok[0] == "kind" && (tok.size() < 2 || tok[1] != "->")) {
            if (tok.size() != 2 || tok[1] != "single") throw ParseError("expected 'kind single'", line_no);
            if (single) throw ParseError("duplicate kind declaration", line_no);
            if (seen_edge) throw ParseError("kind declaration after edge lines", line_no);
            single = true;
            kind_line = line_no;
        } else {
            if (tok.size() < 2 || tok[1] != "->") throw ParseError("expected '<label> -> <label>*'", line_no);
            const auto src = ground->find(tok[0]);
            if (!src) throw ParseError("undeclared label " + std::string(tok[0]), line_no);
            if (has_line[*src]) throw ParseError("duplicate source line for " + std::string(tok[0]), line_no);
            has_line[*src] = true;
            seen_edge = true;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto dst = ground->find(tok[i]);
                if (!dst) throw ParseError("undeclared label " + std::string(tok[i]), line_no);
                if (images[*src].contains(*dst))
                    throw ParseError("duplicate target " + std::string(tok[i]), line_no);
                images[*src].insert(*dst);
            }
            if (single && images[*src].size() != 1)
                throw ParseError("kind single requires exactly one target for " + std::string(tok[0]), line_no);
        }
        if (nl == text.size()) break;
    }
    if (!ground) throw ParseError("missing 'points' declaration", line_no == 0 ? 1 : line_no);

    Multifunction f(*ground, std::move(images));
    if (!single) return f;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f(x).size() != 1)
            throw ParseError("kind single requires an image for " + ground->label(x),
                             last_line ? last_line : kind_line);
    return SingleMap::from_multifunction(f);
}

inline std::string serialize(const Multifunction& f) {
    std::string out = "points";
    for (const auto& l : f.ground().labels()) out += " " + l;
    out += "\n";
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f(x).empty()) continue;
        out += f.ground().label(x) + " ->";
        for (auto y : f(x)) out += " " + f.ground().label(y);
        out += "\n";
    }
    return out;
}

inline std::string serialize(const SingleMap& f) {
    std::string out = "points";
    for (const auto& l : f.ground().labels()) out += " " + l;
    out += "\nkind single\n";
    for (std::size_t x = 0; x < f.size(); ++x)
        out += f.ground().label(x) + " -> " + f.ground().label(f(x)) + "\n";
    return out;
}

inline std::string serialize(const MfnValue& v) {
    return std::visit([](const auto& f) { return serialize(f); }, v);
}

} // namespace iterroot

#endif
