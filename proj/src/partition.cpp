#include "raneycore/partition.hpp"

#include <algorithm>
#include <functional>

namespace raneycore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        detail::check_arg(parts_[i] >= 1, "Partition: parts must be positive");
        detail::check_arg(i == 0 || parts_[i - 1] >= parts_[i],
                          "Partition: parts must be weakly decreasing");
    }
}

Natural Partition::size() const {
    Natural total = 0;
    for (int part : parts_) total += part;
    return total;
}

BetaSet::BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(), std::greater<int>());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        detail::check_arg(elems_[i] >= 1, "BetaSet: elements must be positive");
        detail::check_arg(i == 0 || elems_[i - 1] > elems_[i],
                          "BetaSet: elements must be distinct");
    }
}

HookGrid hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto conj = conjugate(lambda).parts();
    HookGrid grid(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        grid[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j)
            grid[i][j] = parts[i] - j + conj[j] - static_cast<int>(i) - 1;
    }
    return grid;
}

BetaSet beta_set(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int m = lambda.length();
    std::vector<int> hooks(m);
    for (int i = 0; i < m; ++i) hooks[i] = parts[i] + m - 1 - i;
    return BetaSet(std::move(hooks));
}

Partition partition_from_beta(const BetaSet& b) {
    const auto& h = b.elements();  // descending
    const int m = b.size();
    std::vector<int> parts(m);
    for (int i = 0; i < m; ++i) parts[i] = h[i] - (m - 1 - i);
    for (int i = 0; i < m; ++i) {
        detail::require(parts[i] >= 1, "partition_from_beta: decoded part not positive");
        detail::require(i == 0 || parts[i - 1] >= parts[i],
                        "partition_from_beta: decoded parts not weakly decreasing");
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return Partition();
    std::vector<int> conj(parts[0]);
    for (int j = 0; j < parts[0]; ++j) {
        int count = 0;
        for (int part : parts)
            if (part >= j + 1) ++count;
        conj[j] = count;
    }
    return Partition(std::move(conj));
}

bool is_core(const Partition& lambda, int t) {
    detail::check_arg(t >= 1, "is_core: t must be positive");
    for (const auto& row : hook_lengths(lambda))
        for (int h : row)
            if (h % t == 0) return false;
    return true;
}

bool all_parts_multiple_of(const Partition& lambda, int p) {
    detail::check_arg(p >= 1, "all_parts_multiple_of: p must be positive");
    for (int part : lambda.parts())
        if (part % p != 0) return false;
    return true;
}

bool has_property_p(const std::vector<int>& s, int l) {
    detail::check_arg(l >= 1, "has_property_p: l must be positive");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        detail::check_arg(sorted[i] >= 1, "has_property_p: elements must be positive");
        detail::check_arg(i == 0 || sorted[i - 1] < sorted[i],
                          "has_property_p: elements must be distinct");
    }
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const bool run_ends = i + 1 == sorted.size() || sorted[i + 1] != sorted[i] + 1;
        if (run_ends) {
            if ((i + 1 - run_start) % static_cast<std::size_t>(l) != 0) return false;
            run_start = i + 1;
        }
    }
    return true;
}

bool has_property_p(const BetaSet& s, int l) { return has_property_p(s.elements(), l); }

}  // namespace raneycore
