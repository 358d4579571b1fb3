#ifndef WQAP_INSTANCE_HPP
#define WQAP_INSTANCE_HPP

#include <cstdint>
#include <vector>

#include "wqap/arith.hpp"

namespace wqap {

enum class Sense { Max, Min };

/**
 * A structured QAP instance: the first matrix is the outer product of a
 * non-negative weight sequence alpha, the second is the pairwise-distance
 * matrix of a 1-D point sequence beta. Both sequences are sorted
 * non-decreasing on construction; solver correctness relies on that order.
 */
class WienerQapInstance {
public:
    WienerQapInstance(std::vector<std::int64_t> alphas,
                      std::vector<std::int64_t> betas);

    int size() const { return static_cast<int>(alphas_.size()); }
    const std::vector<std::int64_t>& alphas() const { return alphas_; }
    const std::vector<std::int64_t>& betas() const { return betas_; }

    std::int64_t alpha_sum() const { return alpha_sum_; }
    std::int64_t beta_span() const { return betas_.back() - betas_.front(); }

    /// A-priori cap on any objective value: (sum alpha)^2 * beta span.
    Wide objective_bound() const { return bound_; }

private:
    std::vector<std::int64_t> alphas_;
    std::vector<std::int64_t> betas_;
    std::int64_t alpha_sum_ = 0;
    Wide bound_ = 0;
};

/// An even-length sequence of positive integers with even total sum 2Q.
class PartitionInstance {
public:
    explicit PartitionInstance(std::vector<std::int64_t> q);

    const std::vector<std::int64_t>& q() const { return q_; }
    int half_count() const { return k_; }      // k, half the sequence length
    std::int64_t half_sum() const { return big_q_; }  // Q

private:
    std::vector<std::int64_t> q_;
    int k_ = 0;
    std::int64_t big_q_ = 0;
};

struct PartitionReduction {
    WienerQapInstance instance;
    Wide threshold;  // yes-instance iff max objective >= threshold
};

/// Builds the hardness-reduction instance: alpha = sorted q, beta = k ones
/// followed by k twos, threshold 2Q^2 under the ordered-pair objective.
PartitionReduction reduce_partition(const PartitionInstance& p);

/// Direct decision check: does some size-k subset of q sum to Q?
/// Enumerates subsets; intended for small instances and test oracles.
bool partition_has_solution(const PartitionInstance& p);

}  // namespace wqap

#endif
