#include "wqap/instance.hpp"

#include <algorithm>
#include <bit>

#include "wqap/errors.hpp"

namespace wqap {

namespace {

// Margin of two bits below the signed 128-bit limit so the doubled cross
// terms of the solver recurrences can never wrap.
constexpr Wide kAccumulatorLimit = Wide(1) << 125;

}  // namespace

WienerQapInstance::WienerQapInstance(std::vector<std::int64_t> alphas,
                                     std::vector<std::int64_t> betas)
    : alphas_(std::move(alphas)), betas_(std::move(betas)) {
    if (alphas_.empty())
        throw Error(ErrorCode::Malformed, "instance needs at least one value");
    if (alphas_.size() != betas_.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "alphas and betas must have equal length");
    for (std::int64_t a : alphas_)
        if (a < 0)
            throw Error(ErrorCode::Malformed, "negative alpha value");
    std::sort(alphas_.begin(), alphas_.end());
    std::sort(betas_.begin(), betas_.end());

    alpha_sum_ = 0;
    for (std::int64_t a : alphas_) {
        if (__builtin_add_overflow(alpha_sum_, a, &alpha_sum_))
            throw Error(ErrorCode::Overflow, "sum of alphas exceeds 64 bits");
    }
    bound_ = checked_mul(checked_mul(Wide(alpha_sum_), Wide(alpha_sum_)),
                         Wide(beta_span()));
    if (bound_ > kAccumulatorLimit)
        throw Error(ErrorCode::Overflow,
                    "instance objective bound exceeds the accumulator range");
}

PartitionInstance::PartitionInstance(std::vector<std::int64_t> q)
    : q_(std::move(q)) {
    if (q_.empty())
        throw Error(ErrorCode::InvalidPartitionInstance, "empty sequence");
    if (q_.size() % 2 != 0)
        throw Error(ErrorCode::InvalidPartitionInstance,
                    "sequence length must be even");
    std::int64_t total = 0;
    for (std::int64_t v : q_) {
        if (v <= 0)
            throw Error(ErrorCode::InvalidPartitionInstance,
                        "entries must be positive");
        if (__builtin_add_overflow(total, v, &total))
            throw Error(ErrorCode::Overflow, "sum of q exceeds 64 bits");
    }
    if (total % 2 != 0)
        throw Error(ErrorCode::InvalidPartitionInstance,
                    "total sum must be even");
    k_ = static_cast<int>(q_.size() / 2);
    big_q_ = total / 2;
}

PartitionReduction reduce_partition(const PartitionInstance& p) {
    std::vector<std::int64_t> betas(p.q().size());
    std::fill(betas.begin(), betas.begin() + p.half_count(), 1);
    std::fill(betas.begin() + p.half_count(), betas.end(), 2);
    Wide threshold =
        checked_mul(2, checked_mul(Wide(p.half_sum()), Wide(p.half_sum())));
    return PartitionReduction{WienerQapInstance(p.q(), std::move(betas)),
                              threshold};
}

bool partition_has_solution(const PartitionInstance& p) {
    const auto& q = p.q();
    int size = static_cast<int>(q.size());
    if (size > 30)
        throw Error(ErrorCode::InstanceTooLarge,
                    "subset enumeration capped at 30 entries");
    for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
        if (std::popcount(mask) != p.half_count()) continue;
        std::int64_t sum = 0;
        for (int i = 0; i < size; ++i)
            if (mask & (1u << i)) sum += q[i];
        if (sum == p.half_sum()) return true;
    }
    return false;
}

}  // namespace wqap
