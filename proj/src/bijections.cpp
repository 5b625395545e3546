#include "forestpat/bijections.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

std::size_t idx(Label v) { return static_cast<std::size_t>(v); }

// Accumulates (vertex, parent) pairs from several partial constructions.
class Builder {
 public:
  void add(Label v, Label parent) {
    labels_.push_back(v);
    parents_.push_back(parent);
  }
  // Copies every vertex of f, re-hanging its tree roots under `root_parent`.
  void graft(const Forest& f, Label root_parent) {
    for (Label v : f.ground()) {
      const Label p = f.parent(v);
      add(v, p == Forest::kRoot ? root_parent : p);
    }
  }
  Forest build() const { return Forest::from_parents(labels_, parents_); }

 private:
  std::vector<Label> labels_;
  std::vector<Label> parents_;
};

// phi with respect to an arbitrary total order given by `key`: an entry hangs
// under the rightmost earlier entry that is key-smaller, or under
// `root_parent` when there is none.
template <typename Key>
void attach_ordered(std::span<const Label> word, Key key, Label root_parent, Builder& out) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    Label parent = root_parent;
    for (std::size_t j = i; j-- > 0;) {
      if (key(word[j]) < key(word[i])) {
        parent = word[j];
        break;
      }
    }
    out.add(word[i], parent);
  }
}

// Inverse of attach_ordered: depth-first reading, key-larger children first.
template <typename Key>
void read_ordered(const Forest& f, Label v, Key key, std::vector<Label>& word) {
  if (v != Forest::kRoot) word.push_back(v);
  auto kids = f.children(v);
  std::sort(kids.begin(), kids.end(), [&](Label a, Label b) { return key(a) > key(b); });
  for (Label c : kids) read_ordered(f, c, key, word);
}

// Vertices of the subtree rooted at v, v included.
std::vector<Label> subtree(const Forest& f, Label v) {
  std::vector<Label> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Label c : f.children(out[i])) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

// Forest induced on `vertices`; a parent outside the set becomes the root.
Forest induced(const Forest& f, std::vector<Label> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<Label> parents;
  for (Label v : vertices) {
    const Label p = f.parent(v);
    parents.push_back(std::binary_search(vertices.begin(), vertices.end(), p) ? p : Forest::kRoot);
  }
  return Forest::from_parents(std::move(vertices), parents);
}

bool is_increasing(const Forest& f) {
  for (Label v : f.ground())
    if (f.parent(v) != Forest::kRoot && f.parent(v) > v) return false;
  return true;
}

bool in_class(const Forest& f, std::initializer_list<const char*> words) {
  PatternSet ps;
  for (const char* w : words) ps.push_back(Pattern::parse(w));
  return avoids(f, ps);
}

bool contains_label(const std::vector<Label>& sorted, Label v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Splits a forest whose top-down maxima are ancestor-closed into the
// increasing part and, per maximum, the forest hanging below it through
// non-maximum children.
struct PeakSplit {
  Forest maxima;                    // induced on the top-down maxima
  std::map<Label, Forest> below;    // maximum -> forest of its non-maximum side
};

PeakSplit split_at_maxima(const Forest& f) {
  PeakSplit s{largest_increasing_subforest(f), {}};
  const auto tdm = top_down_maxima(f);
  for (Label m : tdm) {
    std::vector<Label> rest;
    for (Label c : f.children(m)) {
      if (contains_label(tdm, c)) continue;
      const auto sub = subtree(f, c);
      rest.insert(rest.end(), sub.begin(), sub.end());
    }
    if (!rest.empty()) s.below.emplace(m, induced(f, std::move(rest)));
  }
  return s;
}

std::vector<Label> cycle_at(const PeakSplit& s, Label m) {
  std::vector<Label> cycle{m};
  if (auto it = s.below.find(m); it != s.below.end()) {
    const auto rest = phi_d_inv(it->second).word();
    cycle.insert(cycle.end(), rest.begin(), rest.end());
  }
  return cycle;
}

void hang_decreasing(const std::vector<Label>& cycle, Builder& out) {
  if (cycle.size() < 2) return;
  out.graft(phi_d(Permutation(std::vector<Label>(cycle.begin() + 1, cycle.end()))), cycle.front());
}

// Order keys for tau: the root r is smallest, then the labels above r in
// increasing order, then the labels below r (decreasing for Unimodal132,
// increasing for OneDescent).
auto tau_key(Label r, TauVariant variant) {
  constexpr long kOffset = std::numeric_limits<int>::max();
  return [r, variant](Label i) -> long {
    if (i >= r) return i;
    return kOffset + (variant == TauVariant::Unimodal132 ? r - i : i);
  };
}

Forest wilf_map(const Forest& f, bool toward_321) {
  const auto tdm = top_down_maxima(f);
  std::vector<Label> label(f.parent_array().size(), -1);
  for (Label v : f.ground()) label[idx(v)] = v;

  std::vector<Label> level = f.roots();
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), [&](Label a, Label b) { return label[idx(a)] < label[idx(b)]; });
    for (Label v : level) {
      if (contains_label(tdm, v)) continue;
      std::vector<Label> slots;  // non-maximum positions below v, v excluded
      std::vector<Label> pool;   // labels currently on v's non-maximum subtree
      for (Label u : subtree(f, v)) {
        if (contains_label(tdm, u)) continue;
        pool.push_back(label[idx(u)]);
        if (u != v) slots.push_back(u);
      }
      std::sort(pool.begin(), pool.end());
      Label chosen;
      if (toward_321) {
        chosen = pool.front();
      } else {
        Label ceiling = 0;
        for (Label a = f.parent(v); a != Forest::kRoot; a = f.parent(a))
          ceiling = std::max(ceiling, label[idx(a)]);
        const auto above = std::lower_bound(pool.begin(), pool.end(), ceiling);
        if (above == pool.begin()) continue;
        chosen = *std::prev(above);
      }
      if (chosen == label[idx(v)]) continue;
      pool.erase(std::find(pool.begin(), pool.end(), chosen));
      // The remaining labels keep the relative order of the slots they fill.
      std::sort(slots.begin(), slots.end(), [&](Label a, Label b) { return label[idx(a)] < label[idx(b)]; });
      label[idx(v)] = chosen;
      for (std::size_t i = 0; i < slots.size(); ++i) label[idx(slots[i])] = pool[i];
    }
    std::vector<Label> next;
    for (Label v : level)
      for (Label c : f.children(v)) next.push_back(c);
    level = std::move(next);
  }

  Builder out;
  for (Label v : f.ground()) {
    const Label p = f.parent(v);
    out.add(label[idx(v)], p == Forest::kRoot ? Forest::kRoot : label[idx(p)]);
  }
  return out.build();
}

}  // namespace

Forest phi(const Permutation& p) {
  Builder out;
  attach_ordered(p.word(), [](Label x) { return x; }, Forest::kRoot, out);
  return out.build();
}

Permutation phi_inv(const Forest& f) {
  if (!is_increasing(f)) throw Error(ErrorKind::NotIncreasing, "phi_inv needs an increasing forest");
  std::vector<Label> word;
  read_ordered(f, Forest::kRoot, [](Label x) { return x; }, word);
  return Permutation(std::move(word));
}

Forest phi_d(const Permutation& p) { return complement_forest(phi(p)); }

Permutation phi_d_inv(const Forest& f) { return phi_inv(complement_forest(f)); }

Forest theta(const CycleDecomposition& cd) {
  std::vector<Label> maxima;
  for (const auto& c : cd.cycles()) maxima.push_back(c.front());
  Builder out;
  out.graft(phi(Permutation(maxima)), Forest::kRoot);
  for (const auto& c : cd.cycles()) hang_decreasing(c, out);
  return out.build();
}

CycleDecomposition theta_inv(const Forest& f) {
  if (!in_class(f, {"213", "312"})) throw Error(ErrorKind::NotUnimodal, "forest is not unimodal");
  const auto split = split_at_maxima(f);
  std::vector<CycleDecomposition::Cycle> cycles;
  const auto order = phi_inv(split.maxima);
  for (Label m : order.word()) cycles.push_back(cycle_at(split, m));
  return CycleDecomposition::ordered(std::move(cycles));
}

Forest shallow(const SetPartition& sp) {
  Builder out;
  for (const auto& b : sp.blocks()) {
    out.add(b.front(), Forest::kRoot);
    for (std::size_t i = 1; i < b.size(); ++i) out.add(b[i], b.front());
  }
  return out.build();
}

SetPartition shallow_inv(const Forest& f) {
  if (!is_increasing(f) || height(f) > 2)
    throw Error(ErrorKind::NotInClass, "shallow_inv needs an increasing forest of height at most 2");
  std::vector<Block> blocks;
  for (Label r : f.roots()) {
    Block b{r};
    for (Label c : f.children(r)) b.push_back(c);
    blocks.push_back(std::move(b));
  }
  return SetPartition(std::move(blocks));
}

Forest xi(const CycleDecomposition& pcd) {
  if (!pcd.is_partitioned()) throw Error(ErrorKind::InvalidArgument, "xi needs a partitioned decomposition");
  std::vector<Block> maxima_blocks;
  for (const auto& b : pcd.blocks()) {
    Block mb;
    for (int i : b) mb.push_back(pcd.cycles()[idx(i)].front());
    maxima_blocks.push_back(std::move(mb));
  }
  Builder out;
  out.graft(shallow(SetPartition(std::move(maxima_blocks))), Forest::kRoot);
  for (const auto& c : pcd.cycles()) hang_decreasing(c, out);
  return out.build();
}

CycleDecomposition xi_inv(const Forest& f) {
  if (!in_class(f, {"213", "312", "123"}))
    throw Error(ErrorKind::NotInClass, "forest does not avoid {213, 312, 123}");
  const auto split = split_at_maxima(f);
  std::vector<CycleDecomposition::Cycle> cycles;
  std::map<Label, int> cycle_of;
  for (Label m : split.maxima.ground()) {
    cycle_of[m] = static_cast<int>(cycles.size());
    cycles.push_back(cycle_at(split, m));
  }
  std::vector<std::vector<int>> blocks;
  const auto maxima_blocks = shallow_inv(split.maxima);
  for (const auto& b : maxima_blocks.blocks()) {
    std::vector<int> ib;
    for (Label m : b) ib.push_back(cycle_of.at(m));
    blocks.push_back(std::move(ib));
  }
  return CycleDecomposition::partitioned(std::move(cycles), std::move(blocks));
}

Forest gamma(const OrderedSetPartition& osp) {
  std::vector<Label> maxima;
  for (const auto& b : osp.blocks()) maxima.push_back(b.back());
  Builder out;
  out.graft(phi(Permutation(maxima)), Forest::kRoot);
  for (const auto& b : osp.blocks())
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.add(b[i], b.back());
  return out.build();
}

OrderedSetPartition gamma_inv(const Forest& f) {
  if (!in_class(f, {"213", "312", "321"}))
    throw Error(ErrorKind::NotInClass, "forest does not avoid {213, 312, 321}");
  const auto tdm = top_down_maxima(f);
  std::vector<Block> blocks;
  const auto order = phi_inv(largest_increasing_subforest(f));
  for (Label m : order.word()) {
    Block b{m};
    for (Label c : f.children(m))
      if (!contains_label(tdm, c)) b.push_back(c);
    blocks.push_back(std::move(b));
  }
  return OrderedSetPartition(std::move(blocks));
}

Forest tau(const ListPartition& lp, TauVariant variant) {
  Builder out;
  for (const auto& b : lp.blocks()) attach_ordered(b, tau_key(b.front(), variant), Forest::kRoot, out);
  return out.build();
}

ListPartition tau_inv(const Forest& f, TauVariant variant) {
  std::vector<Block> blocks;
  for (Label r : f.roots()) {
    const auto key = tau_key(r, variant);
    Block word{r};
    auto kids = f.children(r);
    std::sort(kids.begin(), kids.end(), [&](Label a, Label b) { return key(a) > key(b); });
    for (Label c : kids) read_ordered(induced(f, subtree(f, c)), Forest::kRoot, key, word);
    blocks.push_back(std::move(word));
  }
  ListPartition lp(std::move(blocks), {});
  if (tau(lp, variant) != f.without_child_order())
    throw Error(ErrorKind::NotInClass, "forest is outside the image of tau");
  return lp;
}

Forest rho(const Permutation& p) {
  if (p.size() < 2) throw Error(ErrorKind::TwoAfterOne, "rho needs at least two entries");
  const auto& g = p.ground();
  if (p.position_of(g[1]) > p.position_of(g[0]))
    throw Error(ErrorKind::TwoAfterOne, "the second smallest entry must precede the smallest");
  const auto q = inverse(p).word();
  Builder out;
  out.add(q.front(), Forest::kRoot);
  attach_ordered(std::span<const Label>(q).subspan(1), [](Label x) { return x; }, q.front(), out);
  return out.build();
}

Permutation rho_inv(const Forest& f) {
  const auto roots = f.roots();
  if (roots.size() != 1 || f.size() < 2 || descent_kind(f, roots.front()) != DescentKind::ProperDescent)
    throw Error(ErrorKind::NotInClass, "rho_inv needs a tree with a proper descent at its root");
  const Label root = roots.front();
  auto rest = f.ground();
  rest.erase(std::find(rest.begin(), rest.end(), root));
  const Forest below = induced(f, rest);
  if (!is_increasing(below)) throw Error(ErrorKind::NotInClass, "tree has a descent below its root");
  std::vector<Label> q{root};
  const auto tail = phi_inv(below).word();
  q.insert(q.end(), tail.begin(), tail.end());
  return inverse(Permutation(std::move(q)));
}

Forest psi(const ListPartition& lp) {
  std::vector<Label> roots;
  Builder out;
  std::vector<Forest> trees;
  for (const auto& b : lp.blocks()) {
    if (b.size() == 1) {
      roots.push_back(b.front());
      continue;
    }
    Forest t = rho(Permutation(normalize_up_to_reverse(b)));
    const Label r = t.roots().front();
    roots.push_back(r);
    for (Label v : t.ground())
      if (v != r) out.add(v, t.parent(v));
  }
  out.graft(phi(Permutation(roots)), Forest::kRoot);
  return out.build();
}

ListPartition psi_inv(const Forest& f) {
  if (!in_class(f, {"321", "2143", "3142"}))
    throw Error(ErrorKind::NotInClass, "forest does not avoid {321, 2143, 3142}");
  // Block roots: vertices whose whole root path increases.
  std::vector<Label> inc;
  for (Label v : f.ground()) {
    const auto path = f.path_to(v);
    if (std::is_sorted(path.begin(), path.end())) inc.push_back(v);
  }
  std::vector<Block> blocks;
  const auto root_order = phi_inv(induced(f, inc));
  for (Label r : root_order.word()) {
    std::vector<Label> tree{r};
    for (Label c : f.children(r)) {
      if (contains_label(inc, c)) continue;
      const auto sub = subtree(f, c);
      tree.insert(tree.end(), sub.begin(), sub.end());
    }
    if (tree.size() == 1) blocks.push_back({r});
    else blocks.push_back(rho_inv(induced(f, tree)).word());
  }
  ListPartition lp(std::move(blocks), {.ordered_blocks = true, .up_to_reverse = true});
  if (psi(lp) != f.without_child_order())
    throw Error(ErrorKind::NotInClass, "forest is outside the image of psi");
  return lp;
}

Forest alpha(const Forest& f) {
  if (!in_class(f, {"312"})) throw Error(ErrorKind::NotInClass, "alpha needs a 312-avoiding forest");
  return wilf_map(f.without_child_order(), true);
}

Forest beta_wilf(const Forest& f) {
  if (!in_class(f, {"321"})) throw Error(ErrorKind::NotInClass, "beta needs a 321-avoiding forest");
  return wilf_map(f.without_child_order(), false);
}

}  // namespace forestpat
