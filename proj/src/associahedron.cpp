#include "ohl/associahedron.hpp"

#include <algorithm>
#include <mutex>

namespace ohl {

int PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

int PlanarTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const auto& c : children) n += c.internal_vertices();
  return n;
}

bool PlanarTree::is_binary() const {
  if (is_leaf()) return true;
  if (children.size() != 2) return false;
  return children[0].is_binary() && children[1].is_binary();
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree& o) const {
  // Preorder comparison: a leaf sorts first, then children lexicographically.
  const std::size_t n = std::min(children.size(), o.children.size());
  if (children.empty() != o.children.empty()) return children.empty() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = children[i] <=> o.children[i];
    if (c != 0) return c;
  }
  return children.size() <=> o.children.size();
}

PlanarTree leaf() { return PlanarTree{}; }

PlanarTree graft(std::vector<PlanarTree> children) {
  if (children.size() < 2) throw Error(ErrorKind::BadArity, "graft needs at least two subtrees");
  return PlanarTree{std::move(children)};
}

PlanarTree tree_y() { return graft({leaf(), leaf()}); }

PlanarTree corolla(int k) { return graft(std::vector<PlanarTree>(k, leaf())); }

std::string to_text(const PlanarTree& t) {
  if (t.is_leaf()) return "|";
  std::string out = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ' ';
    out += to_text(t.children[i]);
  }
  return out + ")";
}

namespace {

struct TreeParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  PlanarTree tree() {
    skip();
    if (pos >= s.size()) throw Error(ErrorKind::ParseError, "unexpected end of tree");
    if (s[pos] == '|') {
      ++pos;
      return leaf();
    }
    if (s[pos] != '(') throw Error(ErrorKind::ParseError, "unexpected character in tree");
    ++pos;
    std::vector<PlanarTree> kids;
    while (true) {
      skip();
      if (pos >= s.size()) throw Error(ErrorKind::ParseError, "unclosed '(' in tree");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      kids.push_back(tree());
    }
    if (kids.size() < 2) throw Error(ErrorKind::ParseError, "tree node needs at least two children");
    return PlanarTree{std::move(kids)};
  }
};

}  // namespace

PlanarTree parse_tree(std::string_view text) {
  TreeParser p{text};
  PlanarTree t = p.tree();
  p.skip();
  if (p.pos != text.size()) throw Error(ErrorKind::ParseError, "trailing characters after tree");
  return t;
}

namespace {

// Trees with exactly `leaves` leaves.
std::vector<PlanarTree> trees_with_leaves(int leaves, bool binary_only) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::vector<PlanarTree>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({leaves, binary_only});
    if (it != cache.end()) return it->second;
  }
  std::vector<PlanarTree> out;
  if (leaves == 1) {
    out.push_back(leaf());
  } else {
    // Children leaf counts form a composition of `leaves` with >= 2 parts.
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        if (parts.size() < 2 || (binary_only && parts.size() != 2)) return;
        std::vector<std::vector<PlanarTree>> options;
        for (int p : parts) options.push_back(trees_with_leaves(p, binary_only));
        std::vector<PlanarTree> kids(parts.size());
        auto fill = [&](auto&& fself, std::size_t i) -> void {
          if (i == parts.size()) {
            out.push_back(PlanarTree{kids});
            return;
          }
          for (const auto& o : options[i]) {
            kids[i] = o;
            fself(fself, i + 1);
          }
        };
        fill(fill, 0);
        return;
      }
      for (int p = 1; p <= remaining; ++p) {
        if (p == leaves) continue;
        parts.push_back(p);
        self(self, remaining - p);
        parts.pop_back();
      }
    };
    rec(rec, leaves);
  }
  std::sort(out.begin(), out.end());
  std::lock_guard lock(mutex);
  cache.emplace(std::pair{leaves, binary_only}, out);
  return out;
}

}  // namespace

std::vector<PlanarTree> all_trees(int n) { return trees_with_leaves(n + 1, false); }
std::vector<PlanarTree> all_binary_trees(int n) { return trees_with_leaves(n + 1, true); }

// ---------------------------------------------------------------------------

namespace {

PlanarTree replace_children(const std::vector<PlanarTree>& prefix, const PlanarTree& middle,
                            const std::vector<PlanarTree>& suffix) {
  PlanarTree out;
  out.children.reserve(prefix.size() + 1 + suffix.size());
  out.children.insert(out.children.end(), prefix.begin(), prefix.end());
  out.children.push_back(middle);
  out.children.insert(out.children.end(), suffix.begin(), suffix.end());
  return out;
}

TreeComb prec_tree(const PlanarTree& x, const PlanarTree& y) {
  if (x.is_leaf()) return y.is_leaf() ? TreeComb() : TreeComb(y);
  if (y.is_leaf()) return {};
  std::vector<PlanarTree> head(x.children.begin(), x.children.end() - 1);
  TreeComb out;
  for (const auto& [t, c] : star(x.children.back(), y)) out.add(replace_children(head, t, {}), c);
  return out;
}

TreeComb succ_tree(const PlanarTree& x, const PlanarTree& y) {
  if (y.is_leaf()) return x.is_leaf() ? TreeComb() : TreeComb(x);
  if (x.is_leaf()) return {};
  std::vector<PlanarTree> tail(y.children.begin() + 1, y.children.end());
  TreeComb out;
  for (const auto& [t, c] : star(x, y.children.front())) out.add(replace_children({}, t, tail), c);
  return out;
}

TreeComb dot_tree(const PlanarTree& x, const PlanarTree& y) {
  if (x.is_leaf() || y.is_leaf()) return {};
  std::vector<PlanarTree> head(x.children.begin(), x.children.end() - 1);
  std::vector<PlanarTree> tail(y.children.begin() + 1, y.children.end());
  TreeComb out;
  for (const auto& [t, c] : star(x.children.back(), y.children.front()))
    out.add(replace_children(head, t, tail), c);
  return out;
}

}  // namespace

TreeComb td_compose(Generator g, const PlanarTree& x, const PlanarTree& y) {
  switch (g) {
    case Generator::prec: return prec_tree(x, y);
    case Generator::succ: return succ_tree(x, y);
    case Generator::dot: return dot_tree(x, y);
  }
  return {};
}

TreeComb td_compose(Generator g, const TreeComb& x, const TreeComb& y) {
  return bilinear_extend([g](const PlanarTree& a, const PlanarTree& b) { return td_compose(g, a, b); }, x, y);
}

TreeComb star(const PlanarTree& x, const PlanarTree& y) {
  if (x.is_leaf()) return TreeComb(y);
  if (y.is_leaf()) return TreeComb(x);
  thread_local std::map<std::pair<PlanarTree, PlanarTree>, TreeComb> cache;
  auto key = std::pair{x, y};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  TreeComb out = dot_tree(x, y);
  out += prec_tree(x, y);
  out += succ_tree(x, y);
  cache.emplace(std::move(key), out);
  return out;
}

TreeComb star(const TreeComb& x, const TreeComb& y) {
  return bilinear_extend([](const PlanarTree& a, const PlanarTree& b) { return star(a, b); }, x, y);
}

PlanarTree generator_tree(Generator g) {
  switch (g) {
    case Generator::prec: return graft({leaf(), tree_y()});
    case Generator::succ: return graft({tree_y(), leaf()});
    case Generator::dot: return corolla(3);
  }
  return leaf();
}

// ---------------------------------------------------------------------------
// Sector insertion.

namespace {

// One element of a merged boundary chain, listed bottom to top.
struct ChainNode {
  const PlanarTree* x = nullptr;  // x-vertex on the sector boundary, if any
  const PlanarTree* y = nullptr;  // y-vertex on y's outer edge, if any
};

// Every weakly increasing placement of `count` items into positions
// 0..2m, where even positions are edges (any multiplicity) and odd ones are
// vertices (at most one item).
void placements(int count, int max_pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == count) {
    out.push_back(cur);
    return;
  }
  int lo = 0;
  if (!cur.empty()) lo = cur.back() % 2 == 1 ? cur.back() + 1 : cur.back();
  for (int p = lo; p <= max_pos; ++p) {
    cur.push_back(p);
    placements(count, max_pos, cur, out);
    cur.pop_back();
  }
}

// Internal vertices on the path starting at `start`, following the child at
// `pick_last ? back : front`, bottom to top.
std::vector<const PlanarTree*> spine(const PlanarTree& start, bool pick_last) {
  std::vector<const PlanarTree*> out;
  const PlanarTree* cur = &start;
  while (!cur->is_leaf()) {
    out.push_back(cur);
    cur = pick_last ? &cur->children.back() : &cur->children.front();
  }
  return out;
}

// All merged chains of x-vertices `xs` and y-vertices `ys`.
std::vector<std::vector<ChainNode>> merged_chains(const std::vector<const PlanarTree*>& xs,
                                                  const std::vector<const PlanarTree*>& ys) {
  std::vector<std::vector<int>> maps;
  std::vector<int> cur;
  const int max_pos = 2 * static_cast<int>(xs.size());
  placements(static_cast<int>(ys.size()), max_pos, cur, maps);
  std::vector<std::vector<ChainNode>> out;
  for (const auto& m : maps) {
    std::vector<ChainNode> chain;
    std::size_t t = 0;
    for (int pos = 0; pos <= max_pos; ++pos) {
      if (pos % 2 == 0) {
        while (t < ys.size() && m[t] == pos) chain.push_back({nullptr, ys[t++]});
      } else {
        ChainNode node{xs[pos / 2], nullptr};
        if (t < ys.size() && m[t] == pos) node.y = ys[t++];
        chain.push_back(node);
      }
    }
    out.push_back(std::move(chain));
  }
  return out;
}

// Builds the tree of a chain from the top down. On the left boundary the
// x-vertices continue through their last child and y-vertices through their
// first; `left = false` mirrors this.
PlanarTree build_chain(const std::vector<ChainNode>& chain, bool left) {
  PlanarTree cur = leaf();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<PlanarTree> x_others, y_others;
    if (it->x) {
      const auto& k = it->x->children;
      if (left) x_others.assign(k.begin(), k.end() - 1);
      else x_others.assign(k.begin() + 1, k.end());
    }
    if (it->y) {
      const auto& k = it->y->children;
      if (left) y_others.assign(k.begin() + 1, k.end());
      else y_others.assign(k.begin(), k.end() - 1);
    }
    PlanarTree node;
    if (left) {
      node.children = std::move(x_others);
      node.children.push_back(std::move(cur));
      node.children.insert(node.children.end(), y_others.begin(), y_others.end());
    } else {
      node.children = std::move(y_others);
      node.children.push_back(std::move(cur));
      node.children.insert(node.children.end(), x_others.begin(), x_others.end());
    }
    cur = std::move(node);
  }
  return cur;
}

// Insertion at the sector between children j and j+1 of `v`.
TreeComb insert_at_vertex(const PlanarTree& v, std::size_t j, const PlanarTree& y) {
  const auto& xc = v.children;
  const auto& yc = y.children;
  auto x_left = spine(xc[j], true);
  auto x_right = spine(xc[j + 1], false);
  auto y_left = spine(yc.front(), false);
  auto y_right = spine(yc.back(), true);
  auto lefts = merged_chains(x_left, y_left);
  auto rights = merged_chains(x_right, y_right);
  TreeComb out;
  for (const auto& lc : lefts) {
    PlanarTree lt = build_chain(lc, true);
    for (const auto& rc : rights) {
      PlanarTree rt = build_chain(rc, false);
      PlanarTree t;
      t.children.assign(xc.begin(), xc.begin() + static_cast<long>(j));
      t.children.push_back(lt);
      t.children.insert(t.children.end(), yc.begin() + 1, yc.end() - 1);
      t.children.push_back(std::move(rt));
      t.children.insert(t.children.end(), xc.begin() + static_cast<long>(j) + 2, xc.end());
      out.add(std::move(t), 1);
    }
  }
  return out;
}

TreeComb sector_insert_rec(const PlanarTree& x, int sector, const PlanarTree& y) {
  int i = sector;
  for (std::size_t j = 0; j < x.children.size(); ++j) {
    const int inner = x.children[j].leaves() - 1;
    if (i <= inner) {
      TreeComb out;
      std::vector<PlanarTree> prefix(x.children.begin(), x.children.begin() + static_cast<long>(j));
      std::vector<PlanarTree> suffix(x.children.begin() + static_cast<long>(j) + 1, x.children.end());
      for (const auto& [t, c] : sector_insert_rec(x.children[j], i, y))
        out.add(replace_children(prefix, t, suffix), c);
      return out;
    }
    i -= inner;
    if (i == 1) return insert_at_vertex(x, j, y);
    i -= 1;
  }
  throw Error(ErrorKind::BadSector, "sector out of range");
}

}  // namespace

TreeComb sector_insert(const PlanarTree& x, int sector, const PlanarTree& y) {
  if (sector < 1 || sector > x.degree())
    throw Error(ErrorKind::BadSector, "sector " + std::to_string(sector) + " not in [1," + std::to_string(x.degree()) + "]");
  if (y.is_leaf()) throw Error(ErrorKind::BadArity, "cannot insert the degree-0 tree |");
  return sector_insert_rec(x, sector, y);
}

// ---------------------------------------------------------------------------

TreeTensor tree_coproduct(const PlanarTree& t) {
  if (t.is_leaf()) return simple_tensor(leaf(), leaf());
  thread_local std::map<PlanarTree, TreeTensor> cache;
  if (auto it = cache.find(t); it != cache.end()) return it->second;
  // Running sum of partial terms (∨ prefix children, star of right factors).
  std::vector<std::pair<std::pair<std::vector<PlanarTree>, TreeComb>, Rational>> partial;
  partial.push_back({{{}, TreeComb(leaf())}, Rational(1)});
  for (const auto& child : t.children) {
    std::vector<std::pair<std::pair<std::vector<PlanarTree>, TreeComb>, Rational>> next;
    for (const auto& [term, c] : partial) {
      for (const auto& [ct, cc] : tree_coproduct(child)) {
        auto kids = term.first;
        kids.push_back(ct.left);
        next.push_back({{std::move(kids), star(term.second, TreeComb(ct.right))}, c * cc});
      }
    }
    partial = std::move(next);
  }
  TreeTensor out = simple_tensor(leaf(), t);
  for (const auto& [term, c] : partial)
    for (const auto& [r, rc] : term.second) out.add({PlanarTree{term.first}, r, std::nullopt}, c * rc);
  cache.emplace(t, out);
  return out;
}

TreeTensor tree_bar_coproduct(const PlanarTree& t) {
  if (t.is_leaf()) return simple_tensor(leaf(), leaf());
  TreeTensor out = simple_tensor(leaf(), t);
  std::vector<PlanarTree> head(t.children.begin(), t.children.end() - 1);
  for (const auto& [ct, c] : tree_bar_coproduct(t.children.back()))
    out.add({replace_children(head, ct.left, {}), ct.right, std::nullopt}, c);
  return out;
}

PlanarTree backslash(const PlanarTree& t, const PlanarTree& s) {
  if (t.is_leaf()) return s;
  PlanarTree out = t;
  out.children.back() = backslash(t.children.back(), s);
  return out;
}

// ---------------------------------------------------------------------------

PlanarTree phi(const SetComposition& p) {
  if (p.empty()) return leaf();
  const int n = p.size();
  const auto& first = p.blocks.front();
  SetComposition rest{{p.blocks.begin() + 1, p.blocks.end()}};
  std::vector<PlanarTree> kids;
  int lo = 1;
  auto interval = [&](int a, int b) {
    std::vector<int> s;
    for (int v = a; v <= b; ++v) s.push_back(v);
    return phi(sc_restrict(rest, s));
  };
  for (int v : first) {
    kids.push_back(interval(lo, v - 1));
    lo = v + 1;
  }
  kids.push_back(interval(lo, n));
  return graft(std::move(kids));
}

PlanarTree phi0(const Permutation& s) { return phi(perm_to_sc0(s)); }

PlanarTree theta(const SetComposition& p) { return phi(sc_reverse(p)); }

namespace {

const std::map<PlanarTree, std::vector<SetComposition>>& phi_fibers(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<PlanarTree, std::vector<SetComposition>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::map<PlanarTree, std::vector<SetComposition>> fibers;
    for (auto& p : all_set_compositions(n)) fibers[phi(p)].push_back(std::move(p));
    it = cache.emplace(n, std::move(fibers)).first;
  }
  return it->second;
}

}  // namespace

ScComb psi(const PlanarTree& t) {
  ScComb out;
  const auto& fibers = phi_fibers(t.degree());
  if (auto it = fibers.find(t); it != fibers.end())
    for (const auto& p : it->second) out.add(p, 1);
  return out;
}

PermComb psi0(const PlanarTree& t) {
  if (!t.is_binary()) throw Error(ErrorKind::NotBinary, to_text(t) + " is not binary");
  PermComb out;
  for (const auto& [p, c] : psi(t))
    if (p.degree() == 0) out.add(sc0_to_perm(p), c);
  return out;
}

TreeComb dend_projection(const PlanarTree& t) { return t.is_binary() ? TreeComb(t) : TreeComb(); }

TreeComb dend_product(const PlanarTree& s, const PlanarTree& t) {
  if (s.is_leaf()) return TreeComb(t);
  if (t.is_leaf()) return TreeComb(s);
  TreeComb sum = td_compose(Generator::prec, s, t) + td_compose(Generator::succ, s, t);
  return sum.map([](const PlanarTree& x) { return dend_projection(x); });
}

TreeTensor dend_coproduct(const PlanarTree& t) {
  TreeTensor out;
  for (const auto& [b, c] : tree_coproduct(t))
    if (b.left.is_binary() && b.right.is_binary()) out.add(b, c);
  return out;
}

}  // namespace ohl
