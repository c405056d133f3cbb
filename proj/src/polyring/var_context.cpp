#include "xtp/polyring/var_context.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "xtp/polyring/errors.hpp"
#include "xtp/simd/monomial_kernels.hpp"

namespace xtp {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    const auto head = static_cast<unsigned char>(s.front());
    if (std::isalpha(head) == 0 && head != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) != 0 || u == '_';
    });
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> names) {
    if (names.size() > simd::kMaxVars) {
        throw std::invalid_argument("VarContext: at most " + std::to_string(simd::kMaxVars) +
                                    " indeterminates supported, got " + std::to_string(names.size()));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_identifier(names[i])) throw std::invalid_argument("VarContext: bad identifier '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (names[i] == names[j]) throw std::invalid_argument("VarContext: duplicate name '" + names[i] + "'");
        }
    }
    return std::shared_ptr<const VarContext>(new VarContext(std::move(names)));
}

std::optional<VarId> VarContext::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<VarId>(i);
    }
    return std::nullopt;
}

VarId VarContext::index(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw UnknownVariable("unknown indeterminate '" + std::string(name) + "'");
}

}  // namespace xtp
