#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dfop/common.hpp"
#include "dfop/finset.hpp"

namespace dfop::fincat {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

// A finite category as explicit tables. Arrows carry global ids; hom lists
// keep the canonical order fixed at construction. Composition is stored as a
// dense matrix for small categories and a hash map beyond that.
class FinCat {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;  // per object: arrow id

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  const std::vector<int>& hom(int x, int y) const { return hom_[x * objects.size() + y]; }

  // g∘f for f: x->y, g: y->z; -1 when not composable
  int then(int f, int g) const {
    if (comp_matrix_.empty()) {
      auto it = comp_map_.find(pack(f, g));
      return it == comp_map_.end() ? -1 : it->second;
    }
    return comp_matrix_[static_cast<std::size_t>(f) * arrows.size() + g];
  }

  bool is_invertible(int f) const { return inverse_[f] >= 0; }
  int inverse_of(int f) const { return inverse_[f]; }

  int object_index(const std::string& o) const;
  int arrow_index(const std::string& a) const;

  // internal: populated by make_fincat
  std::vector<std::vector<int>> hom_;
  std::vector<std::int32_t> comp_matrix_;
  std::unordered_map<std::uint64_t, int> comp_map_;
  std::vector<int> inverse_;

  static std::uint64_t pack(int f, int g) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) |
           static_cast<std::uint32_t>(g);
  }
};

using CatPtr = std::shared_ptr<const FinCat>;

// Builds the derived tables (hom lists, composition lookup, inverses) from the
// raw data. `comp` maps composable pairs (f, g) with f: x->y, g: y->z to g∘f.
// No law checking here; see check_category.
CatPtr make_fincat(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
                   std::vector<int> identity,
                   const std::vector<std::tuple<int, int, int>>& comp);

CatPtr terminal_category();
CatPtr chain_category(int n);     // the poset 0 <= 1 <= ... <= n-1
CatPtr discrete_category(const std::vector<std::string>& objects);

bool cat_equal(const FinCat& a, const FinCat& b);

struct CatVerdict {
  bool ok = true;
  std::string witness;
};

// Exhaustive category-law check: totality of composition on composable pairs,
// identity laws at every object, associativity on all composable triples.
CatVerdict check_category(const FinCat& c);

// -----------------------------------------------------------------------------
// Functors
// -----------------------------------------------------------------------------

struct CatFunctor {
  CatPtr src;
  CatPtr tgt;
  std::vector<int> omap;
  std::vector<int> amap;

  int on_object(int x) const { return omap[x]; }
  int on_arrow(int a) const { return amap[a]; }
};

CatFunctor identity_functor(const CatPtr& c);
CatFunctor compose(const CatFunctor& f, const CatFunctor& g);  // f followed by g
CatFunctor constant_functor(const CatPtr& src, const CatPtr& tgt, int object);

CatVerdict check_functor(const CatFunctor& f);

bool functor_equal(const CatFunctor& f, const CatFunctor& g);

// -----------------------------------------------------------------------------
// Powers, products, reindexing
// -----------------------------------------------------------------------------

struct SizeLimits {
  int max_objects = 4096;
  int max_arrows = 20000;
};

// The power category base^n: objects are n-tuples of base objects, arrows are
// n-tuples of base arrows, everything pointwise and in lexicographic order
// with the canonical tuple naming. n = 0 yields the terminal category.
struct Power {
  CatPtr cat;
  CatPtr base;
  int exponent = 0;

  // mixed-radix decompositions
  int object_component(int X, int i) const;
  std::vector<int> object_components(int X) const;
  int object_of_components(const std::vector<int>& comps) const;
  std::vector<int> arrow_components(int u) const;
  int arrow_of_components(int X, int Y, const std::vector<int>& comps) const;
};

Power power_category(const CatPtr& base, int exponent, const SizeLimits& limits = {});

// the standard reindexing functor base^K -> base^J along l : J -> K
CatFunctor reindex_functor(const Power& powK, const Power& powJ, const finset::FinMap& l);

struct ProductCat {
  CatPtr cat;
  CatPtr left;
  CatPtr right;
  CatFunctor proj1;
  CatFunctor proj2;

  int object_pair(int a, int b) const;
  int arrow_pair(int u, int v) const;
  std::pair<int, int> object_parts(int X) const;
  std::pair<int, int> arrow_parts(int w) const;
};

ProductCat product_category(const CatPtr& a, const CatPtr& b, const SizeLimits& limits = {});

// pairing <F,G> : C -> A x B of functors with common source
CatFunctor pair_functor(const ProductCat& prod, const CatFunctor& f, const CatFunctor& g);

// -----------------------------------------------------------------------------
// Natural isomorphisms
// -----------------------------------------------------------------------------

struct NatIso {
  CatFunctor source;
  CatFunctor target;
  std::vector<int> component;  // per source object: invertible arrow id in tgt
};

CatVerdict check_nat_iso(const NatIso& iso);

enum class SearchStatus { Found, NotIsomorphic, BudgetExceeded };

struct NatIsoResult {
  SearchStatus status = SearchStatus::NotIsomorphic;
  NatIso iso;
  std::string obstruction;
  std::int64_t steps = 0;
};

// Backtracking search for a natural isomorphism between parallel functors,
// object-by-object in canonical order with naturality pruning. `budget`
// bounds candidate component extensions.
NatIsoResult find_natural_iso(const CatFunctor& f, const CatFunctor& g,
                              std::int64_t budget = 1000000);

}  // namespace dfop::fincat
