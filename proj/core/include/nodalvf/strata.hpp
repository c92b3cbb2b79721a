#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodalvf/curve.hpp"

namespace nvf {

// Ordered set partition of {1..n}, blocks listed from the 0-end of the chain.
struct LMType {
  std::vector<std::vector<int>> blocks;

  int n() const;
  // "12|3"; blocks sorted internally. Labels above 9 are comma separated.
  std::string key() const;
  static LMType parse(std::string_view text);  // "12|3" or "1,2|3"

  friend bool operator==(const LMType& a, const LMType& b) { return a.blocks == b.blocks; }
};

// Rooted tree with marking sets on leaves. A single vertex is both root and
// leaf and carries every marking.
struct PnTree {
  std::vector<int> marks;  // nonempty exactly on leaves
  std::vector<PnTree> children;

  bool is_leaf() const { return children.empty(); }
};

struct PnType {
  PnTree root;

  int n() const;
  // Canonical key: a leaf is "{1,2}", any other vertex "[k1,k2,...]" with the
  // child keys sorted. Equal keys mean equal types.
  std::string key() const;
  static PnType parse(std::string_view text);
  // Checks the invariants of a stable marked tree on {1..n}.
  bool valid(int n) const;

  friend bool operator==(const PnType& a, const PnType& b) { return a.key() == b.key(); }
};

std::vector<LMType> lm_types(int n);
std::vector<PnType> pn_types(int n);

int stratum_dim(const LMType& t);
int stratum_dim(const PnType& t);

// b arises from a by merging adjacent blocks.
bool closure_leq(const LMType& a, const LMType& b);
// b arises from a by contracting a set of edges, the result being a valid type.
bool closure_leq(const PnType& a, const PnType& b);

// Number of LM types of each dimension 0..n-1.
std::vector<long> perm_f_vector(int n);

// Cover relations (a < b with nothing strictly between), as index pairs into
// the given list.
template <class T>
std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const std::vector<T>& types);

// A curve of the given type passing pn_object_check: leaves carry d/dx and
// markings at 0, 1, 2, ...; other vertices carry the zero field; every
// component meets its parent through infinity; p_infty is at infinity of the root.
MarkedCurve pn_witness(const PnType& t);

std::string poset_dot(const std::vector<std::string>& keys,
                      const std::vector<std::pair<std::size_t, std::size_t>>& covers);

}  // namespace nvf
