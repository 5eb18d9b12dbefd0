#include "torsionlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace torsionlab {

Poset Poset::from_down_sets(std::vector<std::string> labels, std::vector<Bitset> down) {
  const std::size_t n = labels.size();
  if (down.size() != n) throw std::invalid_argument("down-set count mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (down[a].size() != n) throw std::invalid_argument("down-set width mismatch");
    if (!down[a].test(a)) {
      throw NotAPartialOrder("relation is not reflexive at " + labels[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = down[a].find_first(); b != Bitset::npos; b = down[a].find_next(b)) {
      if (b != a && down[b].test(a)) {
        throw NotAPartialOrder("relation is not antisymmetric: " + labels[a] +
                               ", " + labels[b]);
      }
      if (!down[b].is_subset_of(down[a])) {
        throw NotAPartialOrder("relation is not transitive below " + labels[a]);
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.down_ = std::move(down);
  p.finish();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  const std::size_t n = labels.size();
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) down[a].set(a);
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) throw std::out_of_range("relation index out of range");
    down[b].set(a);
  }
  return from_down_sets(std::move(labels), std::move(down));
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = labels.size();
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) down[a].set(a);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw std::out_of_range("cover index out of range");
    down[b].set(a);
  }
  // Warshall closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < n; ++b) {
      if (down[b].test(k)) down[b] |= down[k];
    }
  }
  return from_down_sets(std::move(labels), std::move(down));
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  up_.assign(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (auto a = down_[b].find_first(); a != Bitset::npos; a = down_[b].find_next(a)) {
      up_[a].set(b);
    }
  }
  covers_.clear();
  for (std::size_t b = 0; b < n; ++b) {
    Bitset strict = down_[b];
    strict.reset(b);
    for (auto a = strict.find_first(); a != Bitset::npos; a = strict.find_next(a)) {
      // a is covered by b iff no c strictly between
      Bitset between = strict & up_[a];
      between.reset(a);
      if (between.none()) covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<std::size_t> Poset::lower_covers(std::size_t a) const {
  std::vector<std::size_t> out;
  for (auto [x, y] : covers_) {
    if (y == a) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::upper_covers(std::size_t a) const {
  std::vector<std::size_t> out;
  for (auto [x, y] : covers_) {
    if (x == a) out.push_back(y);
  }
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (down_[a].count() == 1) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (up_[a].count() == 1) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

bool Poset::is_down_closed(const Bitset& s) const {
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    if (!down_[a].is_subset_of(s)) return false;
  }
  return true;
}

bool Poset::is_up_closed(const Bitset& s) const {
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    if (!up_[a].is_subset_of(s)) return false;
  }
  return true;
}

Bitset Poset::down_closure(const Bitset& s) const {
  Bitset out(size());
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) out |= down_[a];
  return out;
}

Poset interval_poset(std::size_t n) {
  if (n == 0) throw std::invalid_argument("interval_poset requires n >= 1");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> bounds;
  // ordered by length, then left endpoint: singletons first
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 1; i + len - 1 <= n; ++i) {
      const std::size_t j = i + len - 1;
      bounds.emplace_back(i, j);
      labels.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  const std::size_t k = labels.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t a = 0; a < k; ++a) {
      if (bounds[b].first <= bounds[a].first && bounds[a].second <= bounds[b].second) {
        down[b].set(a);
      }
    }
  }
  return Poset::from_down_sets(std::move(labels), std::move(down));
}

Poset opposite(const Poset& p) {
  std::vector<Bitset> down(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) down[a] = p.up_set(a);
  return Poset::from_down_sets(p.labels(), std::move(down));
}

Poset antichain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relation(std::move(labels), {});
}

Poset chain(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), covers);
}

namespace {

/// Elements sorted so every element appears after everything below it.
std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  return order;
}

}  // namespace

std::vector<Ideal> order_ideals(const Poset& p) {
  const std::size_t n = p.size();
  const auto order = linear_extension(p);
  std::vector<Ideal> out;
  // Decision tree over the linear extension: each element is either skipped or,
  // when its strict down-set is present, included. Every leaf is a distinct ideal.
  struct Frame {
    std::size_t depth;
    Bitset current;
  };
  std::vector<Frame> stack;
  stack.push_back({0, Bitset(n)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.depth == n) {
      out.push_back({std::move(f.current)});
      continue;
    }
    const std::size_t x = order[f.depth];
    Bitset below = p.down_set(x);
    below.reset(x);
    if (below.is_subset_of(f.current)) {
      Frame with{f.depth + 1, f.current};
      with.current.set(x);
      stack.push_back(std::move(with));
    }
    stack.push_back({f.depth + 1, std::move(f.current)});
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    const auto ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members < b.members;
  });
  return out;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Poset& p) {
  std::vector<Signature> sig(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    sig[a] = {p.down_set(a).count(), p.up_set(a).count(), p.lower_covers(a).size(),
              p.upper_covers(a).size()};
  }
  return sig;
}

bool extend(const Poset& p, const Poset& q, const std::vector<std::size_t>& order,
            const std::vector<Signature>& sp, const std::vector<Signature>& sq,
            std::size_t depth, std::vector<std::size_t>& image, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const std::size_t x = order[depth];
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (used[y] || sp[x] != sq[y]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const std::size_t a = order[d];
      ok = p.leq(a, x) == q.leq(image[a], y) && p.leq(x, a) == q.leq(y, image[a]);
    }
    if (!ok) continue;
    image[x] = y;
    used[y] = true;
    if (extend(p, q, order, sp, sq, depth + 1, image, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) {
    return std::nullopt;
  }
  auto sp = signatures(p);
  auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> image(p.size());
  std::vector<bool> used(q.size(), false);
  if (!extend(p, q, linear_extension(p), sp, sq, 0, image, used)) return std::nullopt;
  return image;
}

}  // namespace torsionlab
