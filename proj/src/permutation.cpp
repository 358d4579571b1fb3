#include "wqap/permutation.hpp"

namespace wqap {

void validate_permutation(const Permutation& perm) {
    int n = static_cast<int>(perm.size());
    if (n == 0)
        throw Error(ErrorCode::PermutationInvalid, "empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n)
            throw Error(ErrorCode::PermutationInvalid,
                        "value out of range 1..n");
        if (seen[v])
            throw Error(ErrorCode::PermutationInvalid, "repeated value");
        seen[v] = true;
    }
}

bool is_v_shaped(const Permutation& perm) {
    validate_permutation(perm);
    std::size_t i = 0;
    while (i + 1 < perm.size() && perm[i] > perm[i + 1]) ++i;
    while (i + 1 < perm.size() && perm[i] < perm[i + 1]) ++i;
    return i + 1 == perm.size();
}

bool is_pyramidal(const Permutation& perm) {
    validate_permutation(perm);
    int n = static_cast<int>(perm.size());
    Permutation complemented(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        complemented[i] = n + 1 - perm[i];
    return is_v_shaped(complemented);
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::VShaped: return "v-shaped";
        case Shape::Pyramidal: return "pyramidal";
        case Shape::Both: return "both";
        case Shape::Neither: return "neither";
    }
    return "?";
}

Shape classify_shape(const Permutation& perm) {
    bool v = is_v_shaped(perm);
    bool p = is_pyramidal(perm);
    if (v && p) return Shape::Both;
    if (v) return Shape::VShaped;
    if (p) return Shape::Pyramidal;
    return Shape::Neither;
}

Assignment Assignment::from(Permutation perm) {
    Shape shape = classify_shape(perm);
    return Assignment{std::move(perm), shape};
}

}  // namespace wqap
