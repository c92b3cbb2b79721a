#include "nodalvf/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "nodalvf/error.hpp"

namespace nvf {

namespace {

void check_n(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw OutOfRange("n = " + std::to_string(n) + " outside 1.." + std::to_string(max_n));
}

std::string join_marks(const std::vector<int>& marks, bool commas) {
  std::string s;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (commas && i) s += ",";
    s += std::to_string(marks[i]);
  }
  return s;
}

std::string tree_key(const PnTree& t) {
  if (t.is_leaf()) return "{" + join_marks(t.marks, true) + "}";
  std::vector<std::string> keys;
  for (const auto& c : t.children) keys.push_back(tree_key(c));
  std::sort(keys.begin(), keys.end());
  std::string s = "[";
  for (std::size_t i = 0; i < keys.size(); ++i) s += (i ? "," : "") + keys[i];
  return s + "]";
}

void gather_marks(const PnTree& t, std::vector<int>& out) {
  out.insert(out.end(), t.marks.begin(), t.marks.end());
  for (const auto& c : t.children) gather_marks(c, out);
}

bool valid_below(const PnTree& t) {
  if (t.is_leaf()) return !t.marks.empty();
  if (!t.marks.empty() || t.children.size() < 2) return false;
  return std::all_of(t.children.begin(), t.children.end(), valid_below);
}

int dim_below(const PnTree& t) {
  if (t.is_leaf()) return static_cast<int>(t.marks.size()) - 1;
  int d = static_cast<int>(t.children.size()) + 1 - 3;
  for (const auto& c : t.children) d += dim_below(c);
  return d;
}

// All set partitions of elems into at least min_blocks blocks.
void set_partitions(const std::vector<int>& elems, std::size_t min_blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elems.size()) {
      if (blocks.size() >= min_blocks) emit(blocks);
      return;
    }
    // Index loop: deeper calls may reallocate blocks.
    for (std::size_t k = 0, nb = blocks.size(); k < nb; ++k) {
      blocks[k].push_back(elems[i]);
      rec(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({elems[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Subtrees carrying exactly the markings in elems: a leaf, or a vertex whose
// children split elems into at least two parts.
const std::vector<PnTree>& subtrees(const std::vector<int>& elems,
                                    std::map<std::vector<int>, std::vector<PnTree>>& memo) {
  if (auto it = memo.find(elems); it != memo.end()) return it->second;
  std::vector<PnTree> out;
  out.push_back(PnTree{elems, {}});
  set_partitions(elems, 2, [&](const std::vector<std::vector<int>>& parts) {
    std::vector<const std::vector<PnTree>*> options;
    for (const auto& p : parts) options.push_back(&subtrees(p, memo));
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
      PnTree t;
      for (std::size_t k = 0; k < parts.size(); ++k) t.children.push_back((*options[k])[idx[k]]);
      out.push_back(std::move(t));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k]->size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  });
  return memo[elems] = std::move(out);
}

struct FlatTree {
  std::vector<int> parent;  // -1 for the root
  std::vector<std::vector<int>> marks;
};

void flatten(const PnTree& t, int parent, FlatTree& f) {
  int me = static_cast<int>(f.parent.size());
  f.parent.push_back(parent);
  f.marks.push_back(t.marks);
  for (const auto& c : t.children) flatten(c, me, f);
}

}  // namespace

int LMType::n() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string LMType::key() const {
  bool commas = n() > 9;
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> b = blocks[i];
    std::sort(b.begin(), b.end());
    s += (i ? "|" : "") + join_marks(b, commas);
  }
  return s;
}

LMType LMType::parse(std::string_view text) {
  LMType t;
  std::string s(text);
  std::stringstream parts(s);
  std::string part;
  while (std::getline(parts, part, '|')) {
    std::vector<int> block;
    if (part.find(',') != std::string::npos) {
      std::stringstream items(part);
      std::string item;
      while (std::getline(items, item, ',')) {
        try {
          block.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw ParseError("bad label '" + item + "' in '" + s + "'");
        }
      }
    } else {
      for (char ch : part) {
        if (ch < '1' || ch > '9') throw ParseError("bad label '" + std::string(1, ch) + "' in '" + s + "'");
        block.push_back(ch - '0');
      }
    }
    if (block.empty()) throw ParseError("empty block in '" + s + "'");
    std::sort(block.begin(), block.end());
    t.blocks.push_back(block);
  }
  std::vector<int> all;
  for (const auto& b : t.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw ParseError("'" + s + "' is not a partition of {1..n}");
  if (all.empty()) throw ParseError("empty LM type");
  return t;
}

int PnType::n() const {
  std::vector<int> m;
  gather_marks(root, m);
  return static_cast<int>(m.size());
}

std::string PnType::key() const { return tree_key(root); }

PnType PnType::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("PnType '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  };
  std::function<PnTree()> node = [&]() -> PnTree {
    if (pos >= text.size()) throw fail("unexpected end");
    PnTree t;
    if (text[pos] == '{') {
      ++pos;
      while (pos < text.size() && text[pos] != '}') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("expected a label");
        t.marks.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      if (pos >= text.size()) throw fail("missing '}'");
      ++pos;
      std::sort(t.marks.begin(), t.marks.end());
      if (t.marks.empty()) throw fail("empty leaf");
      return t;
    }
    if (text[pos] == '[') {
      ++pos;
      while (pos < text.size() && text[pos] != ']') {
        t.children.push_back(node());
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      if (pos >= text.size()) throw fail("missing ']'");
      ++pos;
      return t;
    }
    throw fail("expected '{' or '['");
  };
  PnType t{node()};
  if (pos != text.size()) throw fail("trailing characters");
  if (!t.valid(t.n())) throw fail("not a stable marked tree");
  return t;
}

bool PnType::valid(int n) const {
  std::vector<int> m;
  gather_marks(root, m);
  std::sort(m.begin(), m.end());
  if (static_cast<int>(m.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (m[i] != i + 1) return false;
  if (root.is_leaf()) return true;
  if (!root.marks.empty() || root.children.size() < 2) return false;
  // Non-root internal vertices meet the parent and at least two children.
  return std::all_of(root.children.begin(), root.children.end(), valid_below);
}

std::vector<LMType> lm_types(int n) {
  check_n(n, 6);
  std::vector<LMType> out;
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  set_partitions(elems, 1, [&](const std::vector<std::vector<int>>& parts) {
    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      LMType t;
      for (std::size_t i : order) t.blocks.push_back(parts[i]);
      out.push_back(std::move(t));
    } while (std::next_permutation(order.begin(), order.end()));
  });
  std::sort(out.begin(), out.end(), [](const LMType& a, const LMType& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    return a.key() < b.key();
  });
  return out;
}

std::vector<PnType> pn_types(int n) {
  check_n(n, 6);
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  std::map<std::vector<int>, std::vector<PnTree>> memo;
  std::vector<std::pair<std::string, PnType>> keyed;
  for (const auto& t : subtrees(elems, memo)) {
    PnType p{t};
    keyed.emplace_back(p.key(), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    int da = stratum_dim(a.second), db = stratum_dim(b.second);
    if (da != db) return da > db;
    return a.first < b.first;
  });
  std::vector<PnType> out;
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

int stratum_dim(const LMType& t) { return t.n() - static_cast<int>(t.blocks.size()); }

int stratum_dim(const PnType& t) {
  const PnTree& r = t.root;
  if (r.is_leaf()) return static_cast<int>(r.marks.size()) - 1;
  int d = static_cast<int>(r.children.size()) - 2;
  for (const auto& c : r.children) d += dim_below(c);
  return d;
}

bool closure_leq(const LMType& a, const LMType& b) {
  if (a.n() != b.n()) throw PreconditionFailed("closure_leq on types with different n");
  std::size_t i = 0;
  for (const auto& target : b.blocks) {
    std::vector<int> acc;
    std::vector<int> want = target;
    std::sort(want.begin(), want.end());
    while (acc.size() < want.size() && i < a.blocks.size()) {
      acc.insert(acc.end(), a.blocks[i].begin(), a.blocks[i].end());
      ++i;
    }
    std::sort(acc.begin(), acc.end());
    if (acc != want) return false;
  }
  return i == a.blocks.size();
}

bool closure_leq(const PnType& a, const PnType& b) {
  if (a.n() != b.n()) throw PreconditionFailed("closure_leq on types with different n");
  const std::string target = b.key();
  if (a.key() == target) return true;
  FlatTree f;
  flatten(a.root, -1, f);
  const int nv = static_cast<int>(f.parent.size());
  const int ne = nv - 1;  // edge e joins vertex e + 1 to its parent
  const int n = a.n();
  for (unsigned mask = 1; mask < (1u << ne); ++mask) {
    // Group representative: the topmost vertex reached through contracted edges.
    std::vector<int> rep(nv);
    for (int v = 0; v < nv; ++v) {
      int r = v;
      while (r != 0 && (mask >> (r - 1)) & 1u) r = f.parent[r];
      rep[v] = r;
    }
    std::vector<PnTree> nodes(nv);
    std::vector<std::vector<int>> kids(nv);
    for (int v = 0; v < nv; ++v) {
      auto& m = nodes[rep[v]].marks;
      m.insert(m.end(), f.marks[v].begin(), f.marks[v].end());
      if (v != 0 && rep[v] == v) kids[rep[f.parent[v]]].push_back(v);
    }
    // Vertices are in preorder, so children come after parents.
    for (int v = nv - 1; v >= 0; --v) {
      if (rep[v] != v) continue;
      std::sort(nodes[v].marks.begin(), nodes[v].marks.end());
      for (int k : kids[v]) nodes[v].children.push_back(std::move(nodes[k]));
    }
    PnType c{std::move(nodes[0])};
    if (c.valid(n) && c.key() == target) return true;
  }
  return false;
}

std::vector<long> perm_f_vector(int n) {
  std::vector<long> counts(n, 0);
  for (const auto& t : lm_types(n)) ++counts[stratum_dim(t)];
  return counts;
}

template <class T>
std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const std::vector<T>& types) {
  const std::size_t m = types.size();
  std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      lt[i][j] = i != j && closure_leq(types[i], types[j]);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!lt[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < m && !between; ++k) between = lt[i][k] && lt[k][j];
      if (!between) covers.emplace_back(i, j);
    }
  return covers;
}

template std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const std::vector<LMType>&);
template std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const std::vector<PnType>&);

MarkedCurve pn_witness(const PnType& t) {
  MarkedCurve c;
  int n = t.n();
  c.markings.resize(n);
  int next = 0;
  std::function<int(const PnTree&)> build = [&](const PnTree& v) -> int {
    int id = next++;
    c.components.push_back({id, v.is_leaf() ? FieldTriple::translation() : FieldTriple::zero()});
    long pos = 0;
    for (int m : v.marks) c.markings[m - 1] = Place{id, ChartPoint(pos++)};
    for (const auto& ch : v.children) {
      int cid = build(ch);
      c.nodes.push_back({Place{id, ChartPoint(pos++)}, Place{cid, ChartPoint::infinity()}});
    }
    return id;
  };
  int root = build(t.root);
  c.p_infty = Place{root, ChartPoint::infinity()};
  return c;
}

std::string poset_dot(const std::vector<std::string>& keys,
                      const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < keys.size(); ++i) os << "  t" << i << " [label=\"" << keys[i] << "\"];\n";
  for (const auto& [a, b] : covers) os << "  t" << a << " -> t" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace nvf
