#ifndef WQAP_PERMUTATION_HPP
#define WQAP_PERMUTATION_HPP

#include <vector>

#include "wqap/errors.hpp"

namespace wqap {

// perm[i] is the 1-based value placed at 1-based position i+1; a valid
// permutation contains each of 1..n exactly once.
using Permutation = std::vector<int>;

/// Throws PermutationInvalid unless perm is a bijection on {1,..,n}.
void validate_permutation(const Permutation& perm);

/// Strictly decreasing, then strictly increasing (either part may be empty).
bool is_v_shaped(const Permutation& perm);

/// Strictly increasing, then strictly decreasing (either part may be empty).
bool is_pyramidal(const Permutation& perm);

enum class Shape { VShaped, Pyramidal, Both, Neither };

const char* shape_name(Shape s);

Shape classify_shape(const Permutation& perm);

struct Assignment {
    Permutation perm;
    Shape shape;

    /// Validates the permutation and classifies its shape.
    static Assignment from(Permutation perm);
};

}  // namespace wqap

#endif
