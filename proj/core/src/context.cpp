#include "regjump/context.hpp"

#include <unordered_set>

namespace regjump {

VariableContext::VariableContext(std::vector<std::string> names)
    : names_(std::move(names)) {
    if (names_.empty())
        throw validation_error("variable context must name at least one variable");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw validation_error("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw validation_error("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VariableContext>(std::move(names));
}

ContextPtr make_context(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    v.reserve(names.size());
    for (const char* n : names)
        v.emplace_back(n);
    return make_context(std::move(v));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b))
        throw context_mismatch_error("operands live in different variable contexts");
}

} // namespace regjump
