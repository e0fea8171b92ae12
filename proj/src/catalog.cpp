#include "gca/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gca/error.hpp"

namespace gca {

Group build_cyclic(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<int>((a + b) % n);
  return Group::from_table("Z/" + std::to_string(n), n, std::move(table));
}

namespace {

std::vector<std::vector<int>> all_permutations(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

std::size_t permutation_index(const std::vector<int>& perm) {
  // Lehmer code gives the lexicographic rank.
  std::size_t rank = 0;
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    std::size_t fact = 1;
    for (std::size_t k = 2; k < n - i; ++k) fact *= k;
    rank += smaller * fact;
  }
  return rank;
}

Group build_symmetric(std::size_t n) {
  require(n >= 1 && n <= 5, ErrorKind::InvalidArgument, "symmetric group degree must be in 1..5");
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(cycle_label(perms[a]));
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a * m + b] = static_cast<int>(permutation_index(c));
    }
  }
  return Group::from_table("S" + std::to_string(n), m, std::move(table), std::move(labels));
}

Group build_dihedral(std::size_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  const std::size_t m = 2 * n;
  std::vector<int> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t f1 = x / n, k1 = x % n, f2 = y / n, k2 = y % n;
      // s^f1 r^k1 s^f2 r^k2 = s^(f1+f2) r^(+-k1 + k2)
      const std::size_t k = (f2 ? (n - k1) % n : k1) + k2;
      table[x * m + y] = static_cast<int>(((f1 + f2) % 2) * n + k % n);
    }
  return Group::from_table("D" + std::to_string(n), m, std::move(table));
}

Group build_quaternion() {
  // unit u in {1,i,j,k} = 0..3, index = 2u + (negative ? 1 : 0)
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  std::vector<std::string> labels;
  const char* names[4] = {"1", "i", "j", "k"};
  for (int x = 0; x < 8; ++x) {
    labels.push_back(std::string(x % 2 ? "-" : "") + names[x / 2]);
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ unit_sign[u][v];
      table[static_cast<std::size_t>(x * 8 + y)] = 2 * unit_product[u][v] + sign;
    }
  }
  return Group::from_table("Q8", 8, std::move(table), std::move(labels));
}

Group direct_product(const Group& a, const Group& b) {
  require(a.is_finite() && b.is_finite(), ErrorKind::Unsupported, "direct product of infinite groups");
  const std::size_t na = a.order(), nb = b.order(), m = na * nb;
  std::vector<int> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const int p = a.mul(static_cast<int>(x / nb), static_cast<int>(y / nb));
      const int q = b.mul(static_cast<int>(x % nb), static_cast<int>(y % nb));
      table[x * m + y] = p * static_cast<int>(nb) + q;
    }
  return Group::from_table(a.name() + "x" + b.name(), m, std::move(table));
}

std::vector<Group> small_groups(std::size_t max_order) {
  require(max_order <= 8, ErrorKind::Unsupported, "the small-group catalog stops at order 8");
  std::vector<Group> out;
  const Group z2 = build_cyclic(2);
  for (std::size_t n = 1; n <= max_order; ++n) {
    switch (n) {
      case 4:
        out.push_back(build_cyclic(4));
        out.push_back(direct_product(z2, z2));
        break;
      case 6:
        out.push_back(build_cyclic(6));
        out.push_back(build_symmetric(3));
        break;
      case 8:
        out.push_back(build_cyclic(8));
        out.push_back(direct_product(build_cyclic(4), z2));
        out.push_back(direct_product(direct_product(z2, z2), z2));
        out.push_back(build_dihedral(4));
        out.push_back(build_quaternion());
        break;
      default:
        out.push_back(build_cyclic(n));
    }
  }
  return out;
}

}  // namespace gca
