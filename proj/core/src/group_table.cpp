#include "kirby/group_table.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "kirby/errors.hpp"

namespace kirby {

GroupTable GroupTable::from_table(std::string name, int order,
                                  std::vector<int> mul) {
  if (order <= 0) {
    throw MalformedInputError("group order must be positive");
  }
  if (mul.size() != static_cast<std::size_t>(order) * order) {
    throw MalformedInputError("multiplication table has wrong size");
  }
  for (int x : mul) {
    if (x < 0 || x >= order) {
      throw MalformedInputError("table entry out of range (not closed)");
    }
  }
  GroupTable g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.mul_ = std::move(mul);

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order; ++a) {
      if (g.mul(e, a) != a || g.mul(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw MalformedInputError("table has no two-sided identity");
  }
  g.identity_ = identity;

  g.inverse_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) {
      throw MalformedInputError("table element has no inverse");
    }
  }

  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw MalformedInputError("table is not associative");
        }
      }
    }
  }
  return g;
}

GroupTable cyclic_group(int n) {
  if (n <= 0) throw MalformedInputError("cyclic group order must be positive");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return GroupTable::from_table("Z/" + std::to_string(n), n, std::move(mul));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order() * b.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  auto pack = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          mul[pack(x1, y1) * n + pack(x2, y2)] =
              pack(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  std::string name = a.name() + "x" + b.name();
  if (a.name() == "Z/2" && b.name() == "Z/2") name = "V4";
  return GroupTable::from_table(std::move(name), n, std::move(mul));
}

GroupTable symmetric_group_3() {
  // Elements are the 6 permutations of {0,1,2} in lexicographic order.
  std::array<std::array<int, 3>, 6> perms{};
  std::array<int, 3> base{0, 1, 2};
  for (int i = 0; i < 6; ++i) {
    perms[i] = base;
    std::next_permutation(base.begin(), base.end());
  }
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    return -1;
  };
  std::vector<int> mul(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mul[a * 6 + b] = index_of(c);
    }
  }
  return GroupTable::from_table("S3", 6, std::move(mul));
}

GroupTable dihedral_group_4() {
  // Element i + 4j is r^i s^j with r^4 = s^2 = e and s r = r^-1 s.
  std::vector<int> mul(64);
  for (int i1 = 0; i1 < 4; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 4; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((i1 + (j1 ? 4 - i2 : i2)) % 4);
          int j = (j1 + j2) % 2;
          mul[(i1 + 4 * j1) * 8 + (i2 + 4 * j2)] = i + 4 * j;
        }
      }
    }
  }
  return GroupTable::from_table("D4", 8, std::move(mul));
}

GroupTable quaternion_group() {
  // Elements 2u + s encode (-1)^s * q_u with q_0..q_3 = 1, i, j, k.
  static constexpr int unit_axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // i*j = k, j*k = i, k*i = j; reversed order and squares pick up a sign.
  auto sign_of = [](int u, int v) {
    if (u == 0 || v == 0) return 0;
    if (u == v) return 1;
    const bool positive = (u == 1 && v == 2) || (u == 2 && v == 3) ||
                          (u == 3 && v == 1);
    return positive ? 0 : 1;
  };
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2;
      const int ub = b / 2, sb = b % 2;
      const int axis = unit_axis[ua][ub];
      const int sign = (sa + sb + sign_of(ua, ub)) % 2;
      mul[a * 8 + b] = 2 * axis + sign;
    }
  }
  return GroupTable::from_table("Q8", 8, std::move(mul));
}

GroupTable group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "D4") return dihedral_group_4();
  if (name == "Q8") return quaternion_group();
  if (name == "V4" || name == "Z/2xZ/2") {
    return direct_product(cyclic_group(2), cyclic_group(2));
  }
  if (name == "Z/2xZ/4") {
    return direct_product(cyclic_group(2), cyclic_group(4));
  }
  if (name == "Z/2xZ/2xZ/2") {
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                          cyclic_group(2));
  }
  if (name.rfind("Z/", 0) == 0) {
    char* end = nullptr;
    long n = std::strtol(name.c_str() + 2, &end, 10);
    if (end && *end == '\0' && n > 0) return cyclic_group(static_cast<int>(n));
  }
  throw MalformedInputError("unknown group name '" + name + "'");
}

std::vector<GroupTable> all_groups_up_to_order_8() {
  std::vector<GroupTable> out;
  out.push_back(cyclic_group(1));
  for (int n = 2; n <= 8; ++n) out.push_back(cyclic_group(n));
  out.push_back(group_by_name("V4"));
  out.push_back(symmetric_group_3());
  out.push_back(group_by_name("Z/2xZ/4"));
  out.push_back(group_by_name("Z/2xZ/2xZ/2"));
  out.push_back(dihedral_group_4());
  out.push_back(quaternion_group());
  return out;
}

namespace {

int evaluate_word(const Word& w, const GroupTable& g,
                  const std::vector<int>& images) {
  int acc = g.identity();
  for (int letter : w.letters()) {
    const int img = images[std::abs(letter) - 1];
    acc = g.mul(acc, letter > 0 ? img : g.inverse(img));
  }
  return acc;
}

}  // namespace

std::uint64_t hom_count(const Presentation& p, const GroupTable& g) {
  check_presentation(p);
  const int n = p.num_generators;
  std::vector<int> images(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool all_satisfied = true;
    for (const Word& r : p.relators) {
      if (evaluate_word(r, g, images) != g.identity()) {
        all_satisfied = false;
        break;
      }
    }
    if (all_satisfied) ++count;

    int pos = 0;
    while (pos < n && images[pos] == g.order() - 1) {
      images[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++images[pos];
  }
  return count;
}

}  // namespace kirby
