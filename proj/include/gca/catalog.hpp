#pragma once

#include <cstddef>
#include <vector>

#include "gca/group.hpp"

namespace gca {

/// Z/n with generator 1.
Group build_cyclic(std::size_t n);
/// Sym(n): permutations of {0..n-1} in lexicographic order (index 0 is the
/// identity), product (s t)(i) = s(t(i)), labels in 1-based cycle notation.
Group build_symmetric(std::size_t n);
/// Dihedral group of order 2n; index k is r^k, index n+k is s r^k.
Group build_dihedral(std::size_t n);
/// Quaternion group of order 8.
Group build_quaternion();
/// Direct product with index a*|B| + b.
Group direct_product(const Group& a, const Group& b);

/// Index of a permutation (images of 0..n-1) inside build_symmetric(n).
std::size_t permutation_index(const std::vector<int>& perm);

/// Every group of order <= max_order (max_order <= 8) up to isomorphism, in
/// increasing order.
std::vector<Group> small_groups(std::size_t max_order);

}  // namespace gca
