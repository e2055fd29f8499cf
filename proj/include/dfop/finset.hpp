#pragma once

#include <string>
#include <vector>

#include "dfop/common.hpp"

namespace dfop::finset {

// A named finite set. Element order is fixed at construction and never
// changes; it defines the canonical bijection b_I : I -> {1..n} that the
// bridge module relies on. Equality is by name and element list, never up to
// isomorphism.
struct FinSet {
  std::string name;
  std::vector<std::string> elements;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const std::string& e) const;  // -1 when absent

  bool operator==(const FinSet& other) const {
    return name == other.name && elements == other.elements;
  }
};

// validates distinctness of elements
FinSet make_finset(std::string name, std::vector<std::string> elements);

// the canonical n-element set: name "n", elements "1".."n"
FinSet canonical_set(int n);

// A total mapping between finite sets, stored by element index.
struct FinMap {
  FinSet source;
  FinSet target;
  std::vector<int> assign;  // assign[i] = index in target.elements

  int apply(int i) const { return assign[i]; }
  const std::string& apply_name(const std::string& e) const;

  bool operator==(const FinMap& other) const {
    return source == other.source && target == other.target && assign == other.assign;
  }
};

FinMap make_finmap(FinSet source, FinSet target, std::vector<int> assign);
FinMap make_finmap_by_name(FinSet source, FinSet target,
                           const std::vector<std::pair<std::string, std::string>>& pairs);
FinMap identity_map(const FinSet& I);

// human-readable one-liners used in witnesses; deterministic
std::string render(const FinSet& I);
std::string render(const FinMap& f);

// stable key strings for memo tables
std::string key(const FinSet& I);
std::string key(const FinMap& f);

// g∘f, in diagram order: f first, then g.
FinMap compose(const FinMap& f, const FinMap& g);

bool is_bijection(const FinMap& f);
bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
FinMap inverse(const FinMap& f);  // requires is_bijection

// Pullback of the cospan f : I -> K <- L : g. The apex carries the commuting
// pairs "(i,l)" in lexicographic order of (index in I, index in L); left and
// right are the coordinate projections.
struct SpanWitness {
  FinSet apex;
  FinMap left;   // apex -> I
  FinMap right;  // apex -> L
};

SpanWitness pullback(const FinMap& f, const FinMap& g);

// Binary disjoint sum. Carrier elements are tagged "l:i" / "r:j", left block
// first, each block in its source order.
struct SumWitness {
  FinSet carrier;
  FinMap inj_left;
  FinMap inj_right;
};

SumWitness disjoint_sum(const FinSet& I, const FinSet& J);

// The sum map f+g : I+K -> J+L induced on the given sum witnesses.
FinMap sum_map(const FinMap& f, const FinMap& g, const SumWitness& src, const SumWitness& tgt);

// One fibre restriction f_j : f^-1(j) -> {j}; disjoint summing the family
// reconstructs f up to the canonical bijection.
struct Fiber {
  std::string over;  // element of the target
  FinMap restriction;
};

std::vector<Fiber> fiber_decompose(const FinMap& f);

// indices (in I order) of the fibre of f over target index j
std::vector<int> fiber_indices(const FinMap& f, int j);

// Extensivity instance checker for the double-square diagram over a sum:
//
//     I --tl--> R <--tr-- K
//     |vl       |vm       |vr
//     J --β1--> J+L <--β2-- L     (bottom: `bottom`, a SumWitness)
//
// Returns true iff (top row is a sum) <=> (both squares are pullbacks); in
// Set_f this always holds on commuting input, so a false return carries the
// violated side as a witness. Throws NonCommuting when a square fails to
// commute.
struct ExtensivityVerdict {
  bool holds = true;
  bool top_is_sum = false;
  bool left_square_pb = false;
  bool right_square_pb = false;
  std::string witness;
};

ExtensivityVerdict check_extensive(const SumWitness& bottom, const FinMap& top_left,
                                   const FinMap& top_right, const FinMap& vert_left,
                                   const FinMap& vert_mid, const FinMap& vert_right);

// true iff (u : I -> R, v : K -> R) exhibits R as the sum of I and K
bool is_sum_diagram(const FinMap& u, const FinMap& v);

// true iff the commuting square with top t, verticals a (left), b (right) and
// bottom m is a pullback:   . --t--> .
//                           |a       |b
//                           . --m--> .
bool is_pullback_square(const FinMap& t, const FinMap& a, const FinMap& b, const FinMap& m);

// all |J|^|I| maps I -> J, assignment vectors in lexicographic order
std::vector<FinMap> all_maps(const FinSet& I, const FinSet& J);

}  // namespace dfop::finset
