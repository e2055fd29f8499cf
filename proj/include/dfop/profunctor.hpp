#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dfop/fincat.hpp"

namespace dfop::fincat {

// A profunctor C ⇸ D as a table of finite sets with two-sided actions:
// a functor C^op x D -> Set. Elements live in one flat array ordered
// lexicographically by (x, y, position); actions are dense (arrow, element)
// tables with -1 on undefined combinations.
//
//   left action  (contravariant): u : x' -> x  sends  Φ(x,y) -> Φ(x',y)
//   right action (covariant):     v : y  -> y' sends  Φ(x,y) -> Φ(x,y')
class Profunctor {
 public:
  std::string name;
  CatPtr src;  // C
  CatPtr tgt;  // D

  std::vector<std::string> elem_names;
  std::vector<int> ex, ey;        // coordinates per element
  std::vector<int> offsets;      // size nx*ny+1; fibre (x,y) = [off(x,y), off(x,y)+size)
  std::vector<std::int32_t> lact;  // [u * total + e]
  std::vector<std::int32_t> ract;  // [v * total + e]

  int total() const { return static_cast<int>(elem_names.size()); }
  int fibre_begin(int x, int y) const { return offsets[x * tgt->num_objects() + y]; }
  int fibre_size(int x, int y) const {
    int i = x * tgt->num_objects() + y;
    return offsets[i + 1] - offsets[i];
  }
  int left(int u, int e) const { return lact[static_cast<std::size_t>(u) * total() + e]; }
  int right(int v, int e) const { return ract[static_cast<std::size_t>(v) * total() + e]; }

  std::string elem_coord(int e) const {
    return "(" + src->objects[ex[e]] + "," + tgt->objects[ey[e]] + ")";
  }
};

using ProfPtr = std::shared_ptr<const Profunctor>;

// Generic builder: fibres supplied per (x,y) in canonical order, then actions
// filled by callbacks which see the partially built profunctor (fibres and
// coordinates populated) and produce flat element ids.
ProfPtr build_profunctor(
    std::string name, CatPtr src, CatPtr tgt,
    const std::function<std::vector<std::string>(int x, int y)>& fibre,
    const std::function<int(const Profunctor& partial, int u, int e)>& left_of,
    const std::function<int(const Profunctor& partial, int v, int e)>& right_of);

struct ProfVerdict {
  bool ok = true;
  std::string witness;
};

// functoriality of both actions plus their commutation, fully exhaustive
ProfVerdict check_profunctor(const Profunctor& p);

// identity proarrow: (x,y) -> C(x,y) with composition actions
ProfPtr hom_profunctor(const CatPtr& c);

// Φ_F = D(F-,-) for F : C -> D
ProfPtr representable_of(const CatFunctor& f);

// C(-,G-) : C ⇸ D for G : D -> C
ProfPtr corepresentable_of(const CatFunctor& g);

// (Φ×Ψ)((X,X'),(Y,Y')) = Φ(X,Y) × Ψ(X',Y') over the given product categories
ProfPtr product_profunctor(const Profunctor& phi, const Profunctor& psi, const ProductCat& srcProd,
                           const ProductCat& tgtProd);

bool prof_tables_equal(const Profunctor& a, const Profunctor& b, std::string* why = nullptr);

// -----------------------------------------------------------------------------
// Cells
// -----------------------------------------------------------------------------

// α : Φ -> Ψ(F-, G-), i.e. components Φ(x,y) -> Ψ(Fx, Gy) natural on both
// sides.
struct ProfCell {
  ProfPtr from;
  ProfPtr to;
  CatFunctor top;     // F : from.src -> to.src
  CatFunctor bottom;  // G : from.tgt -> to.tgt
  std::vector<std::int32_t> comp;  // flat from-element -> flat to-element

  int apply(int e) const { return comp[e]; }
};

ProfCell identity_cell(const ProfPtr& phi);

struct CellVerdict {
  bool ok = true;
  std::string witness;
};

// boundary sanity plus exhaustive two-sided naturality
CellVerdict check_cell(const ProfCell& cell);

// horizontal pasting: cells side by side, β after α
ProfCell paste_horizontal(const ProfCell& alpha, const ProfCell& beta);

// -----------------------------------------------------------------------------
// Coend composition
// -----------------------------------------------------------------------------

// Composite (Φ;Ψ)(x,z) = ⊔_y Φ(x,y)×Ψ(y,z) / ((m·φ, ψ) ~ (φ, ψ·m)), computed
// with union-find; classes are represented by the least raw pair in canonical
// order, and the induced actions act on representatives then normalize.
struct CoendResult {
  ProfPtr composite;
  // raw pair indexing: rawIndex(φ,ψ) = prefix[φ] + (ψ - first ψ with middle y)
  std::vector<std::int64_t> prefix;       // per Φ-element
  std::vector<int> psi_block_begin;       // per middle object y: first flat Ψ-element with ey... (see cpp)
  std::vector<std::int32_t> class_of_raw; // raw pair -> composite element
  std::vector<std::int64_t> rep_raw;      // composite element -> representative raw pair
  ProfPtr phi;
  ProfPtr psi;

  std::int64_t raw_total = 0;
  std::int64_t raw_index(int phi_elem, int psi_elem) const;
  std::pair<int, int> raw_pair(std::int64_t raw) const;  // (φ, ψ)
  int class_of(int phi_elem, int psi_elem) const { return class_of_raw[raw_index(phi_elem, psi_elem)]; }
};

CoendResult compose_profunctors(const ProfPtr& phi, const ProfPtr& psi);

// vertical pasting through coend representatives: given α : Φ1 -> Ψ1 over
// (F, G) and β : Φ2 -> Ψ2 over (G, H), produces (Φ1;Φ2) -> (Ψ1;Ψ2) over (F, H)
ProfCell paste_vertical(const ProfCell& alpha, const ProfCell& beta, const CoendResult& src,
                        const CoendResult& dst);

// canonical unit comparison coend(hom_C, Φ) -> Φ, [(u,e)] -> u·e;
// and coend(Φ, hom_D) -> Φ, [(e,v)] -> e·v. Verified bijective by the caller.
std::vector<int> unit_left_comparison(const CoendResult& ce);   // composite elem -> Φ elem
std::vector<int> unit_right_comparison(const CoendResult& ce);  // composite elem -> Φ elem

// -----------------------------------------------------------------------------
// Profunctor isomorphism search
// -----------------------------------------------------------------------------

struct ProfIso {
  ProfPtr from;
  ProfPtr to;
  std::vector<std::int32_t> fwd;  // flat bijection, fibrewise
};

CellVerdict check_prof_iso(const ProfIso& iso);

struct ProfIsoResult {
  SearchStatus status = SearchStatus::NotIsomorphic;
  ProfIso iso;
  std::string obstruction;
  std::int64_t steps = 0;
};

// Fibrewise backtracking with naturality pruning between decided fibres;
// cardinality obstructions are reported without search. `budget` bounds
// element-level candidate extensions.
ProfIsoResult find_profunctor_iso(const ProfPtr& phi, const ProfPtr& psi,
                                  std::int64_t budget = 1000000);

}  // namespace dfop::fincat
