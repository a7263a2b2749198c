#ifndef LOCTOWER_INDEX_CHAIN_HPP
#define LOCTOWER_INDEX_CHAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "loctower/errors.hpp"

namespace loctower {

/// Truncated directed set {1..N} with nested coordinate-space dimensions
/// d_1 < d_2 < ... < d_N. Level k stands for the span of the first d_k
/// coordinates inside the top space.
class IndexChain {
public:
    static constexpr std::size_t kMaxLevels = 64;

    explicit IndexChain(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty())
            throw TowerError(ErrorCode::BadInput, "index chain must have at least one level");
        if (dims_.size() > kMaxLevels)
            throw TowerError(ErrorCode::BadInput,
                             "index chain exceeds maximum of " + std::to_string(kMaxLevels) + " levels");
        int prev = 0;
        for (int d : dims_) {
            if (d < 1)
                throw TowerError(ErrorCode::BadInput, "chain dimensions must be positive");
            if (d <= prev)
                throw TowerError(ErrorCode::BadInput, "chain dimensions must be strictly increasing");
            prev = d;
        }
    }

    std::size_t size() const noexcept { return dims_.size(); }

    /// Dimension at 1-based level.
    int dim(std::size_t level) const {
        check_level(level);
        return dims_[level - 1];
    }

    const std::vector<int>& dims() const noexcept { return dims_; }

    bool operator==(const IndexChain& other) const noexcept { return dims_ == other.dims_; }
    bool operator!=(const IndexChain& other) const noexcept { return !(*this == other); }

    void check_level(std::size_t level) const {
        if (level < 1 || level > dims_.size())
            throw TowerError(ErrorCode::LevelOutOfRange,
                             "level " + std::to_string(level) + " outside [1, " +
                                 std::to_string(dims_.size()) + "]");
    }

private:
    std::vector<int> dims_;
};

}  // namespace loctower

#endif
