#include "forestpat/forest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

std::size_t idx(Label v) { return static_cast<std::size_t>(v); }

// Walks from v to its tree root; writes labels root-first into `path`.
void fill_path(std::span<const Label> parent, Label v, std::vector<Label>& path) {
  path.clear();
  for (Label x = v; x != Forest::kRoot; x = parent[idx(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
}

}  // namespace

Forest Forest::from_parents(int n, std::span<const Label> parents) {
  if (n < 0 || parents.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidArgument, "parent vector length must equal n");
  std::vector<Label> ground(static_cast<std::size_t>(n));
  std::iota(ground.begin(), ground.end(), 1);
  return from_parents(std::move(ground), parents);
}

Forest Forest::from_parents(std::vector<Label> ground, std::span<const Label> parents) {
  if (parents.size() != ground.size())
    throw Error(ErrorKind::InvalidArgument, "parents must align with the ground set");
  if (ground.empty()) return Forest();
  std::vector<std::size_t> order(ground.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ground[a] < ground[b]; });

  Forest f;
  for (auto i : order) f.ground_.push_back(ground[i]);
  if (std::adjacent_find(f.ground_.begin(), f.ground_.end()) != f.ground_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex label");
  if (!f.ground_.empty() && f.ground_.front() <= 0)
    throw Error(ErrorKind::InvalidArgument, "vertex labels must be positive");

  const Label max_label = f.ground_.empty() ? 0 : f.ground_.back();
  f.parent_.assign(idx(max_label) + 1, -1);
  for (std::size_t i = 0; i < ground.size(); ++i) f.parent_[idx(ground[i])] = parents[i];

  for (Label v : f.ground_) {
    const Label p = f.parent_[idx(v)];
    if (p != kRoot && !f.has_vertex(p))
      throw Error(ErrorKind::ParentOutOfRange,
                  "parent " + std::to_string(p) + " of vertex " + std::to_string(v) + " is not a vertex");
  }
  // Each walk is bounded by the vertex count; exceeding it means a cycle.
  for (Label v : f.ground_) {
    std::size_t steps = 0;
    for (Label x = v; x != kRoot; x = f.parent_[idx(x)]) {
      if (++steps > f.ground_.size())
        throw Error(ErrorKind::CycleDetected, "parent map has a cycle through " + std::to_string(v));
    }
  }
  return f;
}

Forest Forest::with_child_order(std::vector<std::vector<Label>> orders) const {
  if (orders.size() != ground_.size() + 1)
    throw Error(ErrorKind::InvalidArgument, "need one child order per vertex plus the virtual root");
  Forest f = *this;
  f.order_.assign(parent_.size(), {});
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const Label v = i == 0 ? kRoot : ground_[i - 1];
    auto sorted = orders[i];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != children(v))
      throw Error(ErrorKind::InvalidArgument,
                  "child order of vertex " + std::to_string(v) + " is not a permutation of its children");
    f.order_[idx(v)] = std::move(orders[i]);
  }
  return f;
}

Forest Forest::without_child_order() const {
  Forest f = *this;
  f.order_.clear();
  return f;
}

bool Forest::is_standard() const noexcept {
  return ground_.empty() || ground_.back() == static_cast<Label>(ground_.size());
}

bool Forest::has_vertex(Label v) const noexcept {
  return v > 0 && idx(v) < parent_.size() && parent_[idx(v)] >= 0;
}

std::vector<Label> Forest::parents() const {
  std::vector<Label> out;
  out.reserve(ground_.size());
  for (Label v : ground_) out.push_back(parent_[idx(v)]);
  return out;
}

std::vector<Label> Forest::children(Label v) const {
  std::vector<Label> out;
  for (Label c : ground_)
    if (parent_[idx(c)] == v) out.push_back(c);
  return out;
}

std::vector<Label> Forest::ordered_children(Label v) const {
  if (is_ordered()) return order_[idx(v)];
  return children(v);
}

std::vector<Label> Forest::path_to(Label v) const {
  std::vector<Label> path;
  fill_path(parent_, v, path);
  return path;
}

std::vector<std::vector<Label>> root_leaf_paths(const Forest& f) {
  std::vector<char> has_child(f.parent_array().size(), 0);
  for (Label v : f.ground()) {
    const Label p = f.parent(v);
    if (p != Forest::kRoot) has_child[idx(p)] = 1;
  }
  std::vector<std::vector<Label>> paths;
  for (Label v : f.ground())
    if (!has_child[idx(v)]) paths.push_back(f.path_to(v));
  return paths;
}

bool avoids(const Forest& f, const PatternSet& patterns) {
  const auto parent = f.parent_array();
  std::vector<char> has_child(parent.size(), 0);
  for (Label v : f.ground()) {
    const Label p = parent[idx(v)];
    if (p != Forest::kRoot) has_child[idx(p)] = 1;
  }
  std::vector<Label> path;
  path.reserve(f.size());
  for (Label v : f.ground()) {
    if (has_child[idx(v)]) continue;
    fill_path(parent, v, path);
    if (contains_any(path, patterns)) return false;
  }
  return true;
}

bool avoids_all_vertices(const Forest& f, const PatternSet& patterns) {
  std::vector<Label> path;
  for (Label v : f.ground()) {
    fill_path(f.parent_array(), v, path);
    if (contains_any(path, patterns)) return false;
  }
  return true;
}

Forest complement_forest(const Forest& f) {
  const auto& g = f.ground();
  const int n = static_cast<int>(g.size());
  auto flip = [&](Label v) {
    return v == Forest::kRoot ? Forest::kRoot : g[idx(n - 1 - rank_in(g, v))];
  };
  std::vector<Label> parents;
  parents.reserve(g.size());
  // Vertex flip(v) takes the place of v, so its parent is flip(parent(v)).
  for (Label v : g) parents.push_back(flip(f.parent(flip(v))));
  Forest out = Forest::from_parents(g, parents);
  if (!f.is_ordered()) return out;
  std::vector<std::vector<Label>> orders;
  for (std::size_t i = 0; i <= g.size(); ++i) {
    const Label v = i == 0 ? Forest::kRoot : g[i - 1];
    std::vector<Label> o;
    for (Label c : f.ordered_children(flip(v))) o.push_back(flip(c));
    orders.push_back(std::move(o));
  }
  return out.with_child_order(std::move(orders));
}

std::vector<Label> top_down_maxima(const Forest& f) {
  std::vector<Label> out;
  for (Label v : f.ground()) {
    bool is_max = true;
    for (Label x = f.parent(v); x != Forest::kRoot && is_max; x = f.parent(x)) is_max = x < v;
    if (is_max) out.push_back(v);
  }
  return out;
}

Forest largest_increasing_subforest(const Forest& f) {
  const auto tdm = top_down_maxima(f);
  std::vector<Label> parents;
  for (Label v : tdm) {
    const Label p = f.parent(v);
    if (p != Forest::kRoot && !std::binary_search(tdm.begin(), tdm.end(), p))
      throw Error(ErrorKind::NotAncestorClosed,
                  "top-down maximum " + std::to_string(v) + " sits below non-maximum " + std::to_string(p));
    parents.push_back(p);
  }
  Forest out = Forest::from_parents(tdm, parents);
  if (!f.is_ordered()) return out;
  std::vector<std::vector<Label>> orders;
  for (std::size_t i = 0; i <= tdm.size(); ++i) {
    const Label v = i == 0 ? Forest::kRoot : tdm[i - 1];
    std::vector<Label> o;
    for (Label c : f.ordered_children(v))
      if (std::binary_search(tdm.begin(), tdm.end(), c)) o.push_back(c);
    orders.push_back(std::move(o));
  }
  return out.with_child_order(std::move(orders));
}

int height(const Forest& f) {
  int h = 0;
  for (Label v : f.ground()) {
    int d = 0;
    for (Label x = v; x != Forest::kRoot; x = f.parent(x)) ++d;
    h = std::max(h, d);
  }
  return h;
}

DescentKind descent_kind(const Forest& f, Label v) {
  const auto kids = f.children(v);
  if (kids.empty()) return DescentKind::None;
  const auto smaller = std::count_if(kids.begin(), kids.end(), [v](Label c) { return c < v; });
  if (smaller == static_cast<std::ptrdiff_t>(kids.size())) return DescentKind::ProperDescent;
  return smaller > 0 ? DescentKind::Descent : DescentKind::None;
}

std::string shape_signature(const Forest& f) {
  std::function<std::string(Label)> encode = [&](Label v) {
    std::vector<std::string> parts;
    for (Label c : f.children(v)) parts.push_back(encode(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return encode(Forest::kRoot);
}

bool is_binary(const Forest& f) {
  std::vector<int> count(f.parent_array().size(), 0);
  for (Label v : f.ground())
    if (++count[idx(f.parent(v))] > 2) return false;
  return true;
}

}  // namespace forestpat
