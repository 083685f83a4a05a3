#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mdim {

enum class BoundKind { Exact, Lower, Upper, Inapplicable };

// One statement about a graph's metric dimension: an exact value or a
// one-sided bound, tagged with the identifier of the rule that produced it
// and the list of hypotheses that were checked.
struct BoundResult {
    BoundKind kind = BoundKind::Inapplicable;
    long long value = 0;
    std::string source;
    std::vector<std::string> conditions_checked;

    bool applicable() const { return kind != BoundKind::Inapplicable; }

    static BoundResult exact(long long v, std::string source,
                             std::vector<std::string> conditions = {}) {
        return {BoundKind::Exact, v, std::move(source), std::move(conditions)};
    }
    static BoundResult lower(long long v, std::string source,
                             std::vector<std::string> conditions = {}) {
        return {BoundKind::Lower, v, std::move(source), std::move(conditions)};
    }
    static BoundResult upper(long long v, std::string source,
                             std::vector<std::string> conditions = {}) {
        return {BoundKind::Upper, v, std::move(source), std::move(conditions)};
    }
    static BoundResult inapplicable(std::string source,
                                    std::vector<std::string> conditions = {}) {
        return {BoundKind::Inapplicable, 0, std::move(source), std::move(conditions)};
    }
};

std::string to_string(BoundKind kind);

}  // namespace mdim
