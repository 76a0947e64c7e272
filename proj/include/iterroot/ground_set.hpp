#ifndef ITERROOT_GROUND_SET_HPP
#define ITERROOT_GROUND_SET_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace iterroot {

// A label may appear in .mfn text and in comma-separated CLI lists, so it
// must be a single token free of whitespace, '#' and ','.
inline bool is_valid_label(std::string_view label) {
    if (label.empty() || label == "->") return false;
    for (char c : label) {
        if (c == '#' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
            c == '\v' || c == '\f')
            return false;
    }
    return true;
}

// Finite, non-empty, immutable ordered set of labelled points. Points are
// addressed by dense index 0..size()-1. Copies share the label table.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels) {
        if (labels.empty()) throw std::invalid_argument("ground set must be non-empty");
        auto impl = std::make_shared<Impl>();
        impl->labels = std::move(labels);
        for (std::size_t i = 0; i < impl->labels.size(); ++i) {
            const auto& l = impl->labels[i];
            if (!is_valid_label(l)) throw std::invalid_argument("invalid label '" + l + "'");
            if (!impl->index.emplace(l, i).second)
                throw std::invalid_argument("duplicate label '" + l + "'");
        }
        impl_ = std::move(impl);
    }

    // Points labelled prefix0, prefix1, ...
    static GroundSet indexed(std::size_t size, const std::string& prefix = "p") {
        std::vector<std::string> labels;
        labels.reserve(size);
        for (std::size_t i = 0; i < size; ++i) labels.push_back(prefix + std::to_string(i));
        return GroundSet(std::move(labels));
    }

    std::size_t size() const { return impl_->labels.size(); }
    const std::string& label(std::size_t i) const { return impl_->labels.at(i); }
    const std::vector<std::string>& labels() const { return impl_->labels; }

    std::optional<std::size_t> find(std::string_view label) const {
        auto it = impl_->index.find(std::string(label));
        if (it == impl_->index.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(std::string_view label) const {
        if (auto i = find(label)) return *i;
        throw std::invalid_argument("unknown label '" + std::string(label) + "'");
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
    }

private:
    struct Impl {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Impl> impl_;
};

} // namespace iterroot

#endif
