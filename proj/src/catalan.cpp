#include "torsionlab/catalan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torsionlab {

std::size_t catalan_number(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

DyckPath DyckPath::parse(const std::string& steps) {
  int h = 0;
  for (char s : steps) {
    if (s == 'U') {
      ++h;
    } else if (s == 'D') {
      if (--h < 0) throw std::invalid_argument("Dyck path dips below zero: " + steps);
    } else {
      throw std::invalid_argument("Dyck path step must be U or D: " + steps);
    }
  }
  if (h != 0) throw std::invalid_argument("Dyck path does not return to zero: " + steps);
  DyckPath d;
  d.steps_ = steps;
  return d;
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + (steps_[i] == 'U' ? 1 : -1);
  return h;
}

namespace {

void gen_dyck(std::size_t n, std::size_t up, std::size_t down, std::string& cur,
              std::vector<DyckPath>& out) {
  if (up == n && down == n) {
    out.push_back(DyckPath::parse(cur));
    return;
  }
  if (up < n) {
    cur.push_back('U');
    gen_dyck(n, up + 1, down, cur, out);
    cur.pop_back();
  }
  if (down < up) {
    cur.push_back('D');
    gen_dyck(n, up, down + 1, cur, out);
    cur.pop_back();
  }
}

DyckPath from_heights(const std::vector<int>& h) {
  std::string s;
  for (std::size_t i = 1; i < h.size(); ++i) s.push_back(h[i] > h[i - 1] ? 'U' : 'D');
  return DyckPath::parse(s);
}

}  // namespace

std::vector<DyckPath> dyck_paths(std::size_t n) {
  std::vector<DyckPath> out;
  std::string cur;
  gen_dyck(n, 0, 0, cur, out);
  return out;
}

DyckPath dyck_meet(const DyckPath& a, const DyckPath& b) {
  auto ha = a.heights();
  const auto hb = b.heights();
  for (std::size_t i = 0; i < ha.size(); ++i) ha[i] = std::min(ha[i], hb[i]);
  return from_heights(ha);
}

DyckPath dyck_join(const DyckPath& a, const DyckPath& b) {
  auto ha = a.heights();
  const auto hb = b.heights();
  for (std::size_t i = 0; i < ha.size(); ++i) ha[i] = std::max(ha[i], hb[i]);
  return from_heights(ha);
}

FinLattice dyck_lattice(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dyck_lattice requires n >= 1");
  const auto paths = dyck_paths(n);
  const std::size_t k = paths.size();
  std::vector<std::vector<int>> h;
  std::vector<std::string> labels;
  for (const auto& p : paths) {
    h.push_back(p.heights());
    labels.push_back(p.str());
  }
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      bool below = true;
      for (std::size_t i = 0; i < h[a].size() && below; ++i) below = h[a][i] <= h[b][i];
      if (below) down[b].set(a);
    }
  }
  return FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(down)));
}

Ideal dyck_to_ideal(const DyckPath& d) {
  const std::size_t n = d.semilength();
  if (n < 2) return {Bitset(0)};
  const Poset ints = interval_poset(n - 1);
  const auto h = d.heights();
  Bitset members(ints.size());
  std::size_t idx = 0;
  // same enumeration order as interval_poset: by length, then left endpoint
  for (std::size_t len = 1; len <= n - 1; ++len) {
    for (std::size_t i = 1; i + len - 1 <= n - 1; ++i, ++idx) {
      const std::size_t j = i + len - 1;
      if (h[i + j] >= static_cast<int>(j - i + 2)) members.set(idx);
    }
  }
  return {members};
}

namespace {

std::size_t matching_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : -1;
    if (depth == 0) return i;
  }
  throw std::invalid_argument("unbalanced tree code: " + s);
}

}  // namespace

BinaryTree BinaryTree::parse(const std::string& parens) {
  int depth = 0;
  for (char c : parens) {
    if (c != '(' && c != ')') throw std::invalid_argument("tree code uses only ( and )");
    depth += c == '(' ? 1 : -1;
    if (depth < 0) throw std::invalid_argument("unbalanced tree code: " + parens);
  }
  if (depth) throw std::invalid_argument("unbalanced tree code: " + parens);
  BinaryTree t;
  t.code_ = parens;
  return t;
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  t.code_ = "(" + left.code_ + ")" + right.code_;
  return t;
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  const auto close = matching_paren(code_, 0);
  BinaryTree t;
  t.code_ = code_.substr(1, close - 1);
  return t;
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  const auto close = matching_paren(code_, 0);
  BinaryTree t;
  t.code_ = code_.substr(close + 1);
  return t;
}

std::vector<BinaryTree> BinaryTree::right_rotations() const {
  std::vector<BinaryTree> out;
  if (is_leaf()) return out;
  const BinaryTree l = left(), r = right();
  if (!l.is_leaf()) out.push_back(node(l.left(), node(l.right(), r)));
  for (const auto& t : l.right_rotations()) out.push_back(node(t, r));
  for (const auto& t : r.right_rotations()) out.push_back(node(l, t));
  return out;
}

std::vector<BinaryTree> binary_trees(std::size_t n) {
  std::vector<std::vector<BinaryTree>> by_size{{BinaryTree::leaf()}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<BinaryTree> cur;
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& l : by_size[i]) {
        for (const auto& r : by_size[k - 1 - i]) cur.push_back(BinaryTree::node(l, r));
      }
    }
    std::sort(cur.begin(), cur.end());
    by_size.push_back(std::move(cur));
  }
  return by_size[n];
}

FinLattice tamari_lattice(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tamari_lattice requires n >= 1");
  const auto trees = binary_trees(n);
  std::map<std::string, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    index[trees[i].str()] = i;
    labels.push_back(trees[i].str());
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const auto& t : trees[i].right_rotations()) covers.emplace_back(i, index.at(t.str()));
  }
  return FinLattice::from_order(Poset::from_covers(std::move(labels), covers));
}

std::vector<std::string> typeA_interval_labels(std::size_t n) {
  std::vector<std::string> out;
  const Poset p = interval_poset(n);
  for (const auto& l : p.labels()) out.push_back("M" + l);
  return out;
}

FinLattice typeA_torsion_lattice(std::size_t n) {
  if (n == 0 || n > 6) throw std::invalid_argument("typeA_torsion_lattice requires 1 <= n <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> iv;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 1; i + len - 1 <= n; ++i) iv.emplace_back(i, i + len - 1);
  }
  const std::size_t m = iv.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(
        std::find(iv.begin(), iv.end(), std::make_pair(i, j)) - iv.begin());
  };
  std::vector<std::uint32_t> quotients(m, 0);
  struct Ext {
    std::uint32_t sub;
    std::uint32_t middle;
  };
  std::vector<std::vector<Ext>> exts(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto [i, j] = iv[x];
    for (std::size_t k = i; k <= j; ++k) quotients[x] |= 1u << index_of(i, k);
    for (std::size_t l = j + 1; l <= n; ++l) {
      exts[x].push_back({1u << index_of(j + 1, l), 1u << index_of(i, l)});
    }
  }
  std::vector<std::uint32_t> classes;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool closed = true;
    for (std::size_t x = 0; x < m && closed; ++x) {
      if (!(s >> x & 1u)) continue;
      closed = (quotients[x] & s) == quotients[x];
      for (const auto& e : exts[x]) {
        if ((s & e.sub) && !(s & e.middle)) closed = false;
      }
    }
    if (closed) classes.push_back(s);
  }
  std::sort(classes.begin(), classes.end(), [](auto a, auto b) {
    const auto ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  const auto names = typeA_interval_labels(n);
  std::vector<std::string> labels;
  for (auto c : classes) {
    std::string s = "{";
    bool first = true;
    for (std::size_t x = 0; x < m; ++x) {
      if (c >> x & 1u) {
        s += (first ? "" : ",") + names[x];
        first = false;
      }
    }
    labels.push_back(s + "}");
  }
  const std::size_t k = classes.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      if ((classes[a] & classes[b]) == classes[a]) down[b].set(a);
    }
  }
  return FinLattice::from_order(Poset::from_down_sets(std::move(labels), std::move(down)));
}

Poset brick_forcing_poset(std::size_t n) { return opposite(interval_poset(n)); }

Poset rel_star(std::size_t n) {
  if (n < 2) throw std::invalid_argument("rel_star requires a chain with at least 2 elements");
  std::vector<std::pair<std::size_t, std::size_t>> iv;
  std::vector<std::string> labels;
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t a = 1; a + len <= n; ++a) {
      iv.emplace_back(a, a + len);
      labels.push_back("[" + std::to_string(a) + "," + std::to_string(a + len) + "]");
    }
  }
  const std::size_t k = iv.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      if (iv[b].first <= iv[a].first && iv[a].second <= iv[b].second) down[b].set(a);
    }
  }
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

}  // namespace torsionlab
