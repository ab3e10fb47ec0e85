#ifndef REGJUMP_CONTEXT_HPP
#define REGJUMP_CONTEXT_HPP

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regjump/errors.hpp"

namespace regjump {

/// Ordered set of variable names. The list order is the lex order: the
/// first variable is the largest. Immutable once created.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_; }
    bool operator!=(const VariableContext& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);
ContextPtr make_context(std::initializer_list<const char*> names);

/// Structural compatibility (same names in the same order). Pointer
/// equality is the fast path.
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Throws context_mismatch_error unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace regjump

#endif
