#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xtp {

using VarId = std::uint32_t;

// Ordered, immutable set of indeterminate names. The order fixes the
// lexicographic tie-break of the monomial order (first name most significant).
class VarContext {
public:
    // Throws std::invalid_argument on duplicates, malformed identifiers or more
    // than simd::kMaxVars names.
    static std::shared_ptr<const VarContext> make(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(VarId v) const { return names_.at(v); }
    [[nodiscard]] std::optional<VarId> find(std::string_view name) const;
    // Throws UnknownVariable.
    [[nodiscard]] VarId index(std::string_view name) const;

    friend bool operator==(const VarContext& a, const VarContext& b) { return a.names_ == b.names_; }

private:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool is_identifier(std::string_view s);

}  // namespace xtp
