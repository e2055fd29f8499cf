#include "dfop/profunctor.hpp"

#include <algorithm>
#include <numeric>

namespace dfop::fincat {

ProfPtr build_profunctor(std::string name, CatPtr src, CatPtr tgt,
                         const std::function<std::vector<std::string>(int x, int y)>& fibre,
                         const std::function<int(const Profunctor&, int, int)>& left_of,
                         const std::function<int(const Profunctor&, int, int)>& right_of) {
  auto p = std::make_shared<Profunctor>();
  p->name = std::move(name);
  p->src = src;
  p->tgt = tgt;
  const int nx = src->num_objects();
  const int ny = tgt->num_objects();
  p->offsets.assign(static_cast<std::size_t>(nx) * ny + 1, 0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      std::vector<std::string> names = fibre(x, y);
      p->offsets[x * ny + y] = static_cast<int>(p->elem_names.size());
      for (auto& n : names) {
        p->elem_names.push_back(std::move(n));
        p->ex.push_back(x);
        p->ey.push_back(y);
      }
    }
  p->offsets[static_cast<std::size_t>(nx) * ny] = static_cast<int>(p->elem_names.size());
  const int total = p->total();
  p->lact.assign(static_cast<std::size_t>(src->num_arrows()) * total, -1);
  p->ract.assign(static_cast<std::size_t>(tgt->num_arrows()) * total, -1);
  for (int u = 0; u < src->num_arrows(); ++u) {
    int utgt = src->arrows[u].tgt;
    for (int e = 0; e < total; ++e)
      if (p->ex[e] == utgt) p->lact[static_cast<std::size_t>(u) * total + e] = left_of(*p, u, e);
  }
  for (int v = 0; v < tgt->num_arrows(); ++v) {
    int vsrc = tgt->arrows[v].src;
    for (int e = 0; e < total; ++e)
      if (p->ey[e] == vsrc) p->ract[static_cast<std::size_t>(v) * total + e] = right_of(*p, v, e);
  }
  return p;
}

ProfVerdict check_profunctor(const Profunctor& p) {
  const FinCat& c = *p.src;
  const FinCat& d = *p.tgt;
  const int total = p.total();
  for (int e = 0; e < total; ++e) {
    if (p.left(c.identity[p.ex[e]], e) != e)
      return {false, "left identity action moves element '" + p.elem_names[e] + "'"};
    if (p.right(d.identity[p.ey[e]], e) != e)
      return {false, "right identity action moves element '" + p.elem_names[e] + "'"};
  }
  for (int u = 0; u < c.num_arrows(); ++u)
    for (int e = 0; e < total; ++e) {
      int r = p.lact[static_cast<std::size_t>(u) * total + e];
      if (r < 0) continue;
      if (p.ex[r] != c.arrows[u].src || p.ey[r] != p.ey[e])
        return {false, "left action of '" + c.arrows[u].name + "' lands in the wrong fibre"};
    }
  for (int v = 0; v < d.num_arrows(); ++v)
    for (int e = 0; e < total; ++e) {
      int r = p.ract[static_cast<std::size_t>(v) * total + e];
      if (r < 0) continue;
      if (p.ey[r] != d.arrows[v].tgt || p.ex[r] != p.ex[e])
        return {false, "right action of '" + d.arrows[v].name + "' lands in the wrong fibre"};
    }
  // L(u∘u') = L(u')∘L(u) for u' : x'' -> x', u : x' -> x
  for (int u = 0; u < c.num_arrows(); ++u)
    for (int u2 = 0; u2 < c.num_arrows(); ++u2) {
      if (c.arrows[u2].tgt != c.arrows[u].src) continue;
      int uu = c.then(u2, u);
      for (int e = 0; e < total; ++e) {
        if (p.ex[e] != c.arrows[u].tgt) continue;
        if (p.left(uu, e) != p.left(u2, p.left(u, e)))
          return {false, "left action not functorial on ('" + c.arrows[u2].name + "','" +
                             c.arrows[u].name + "') at '" + p.elem_names[e] + "'"};
      }
    }
  // R(v∘v') = R(v')∘R(v) for v : y -> y', v' : y' -> y''
  for (int v = 0; v < d.num_arrows(); ++v)
    for (int v2 = 0; v2 < d.num_arrows(); ++v2) {
      if (d.arrows[v].tgt != d.arrows[v2].src) continue;
      int vv = d.then(v, v2);
      for (int e = 0; e < total; ++e) {
        if (p.ey[e] != d.arrows[v].src) continue;
        if (p.right(vv, e) != p.right(v2, p.right(v, e)))
          return {false, "right action not functorial on ('" + d.arrows[v].name + "','" +
                             d.arrows[v2].name + "') at '" + p.elem_names[e] + "'"};
      }
    }
  for (int u = 0; u < c.num_arrows(); ++u)
    for (int v = 0; v < d.num_arrows(); ++v)
      for (int e = 0; e < total; ++e) {
        if (p.ex[e] != c.arrows[u].tgt || p.ey[e] != d.arrows[v].src) continue;
        if (p.left(u, p.right(v, e)) != p.right(v, p.left(u, e)))
          return {false, "actions do not commute on ('" + c.arrows[u].name + "','" +
                             d.arrows[v].name + "') at '" + p.elem_names[e] + "'"};
      }
  return {true, ""};
}

// flat element of a hom-shaped fibre -> arrow id of the underlying category
static int fibre_arrow(const Profunctor& p, const FinCat& cat_of_fibre, int e) {
  int k = e - p.fibre_begin(p.ex[e], p.ey[e]);
  return cat_of_fibre.hom(p.ex[e], p.ey[e])[k];
}

ProfPtr hom_profunctor(const CatPtr& c) {
  return build_profunctor(
      "hom(" + c->name + ")", c, c,
      [&](int x, int y) {
        std::vector<std::string> names;
        for (int a : c->hom(x, y)) names.push_back(c->arrows[a].name);
        return names;
      },
      [&](const Profunctor& p, int u, int e) {
        int h = fibre_arrow(p, *c, e);
        int r = c->then(u, h);
        int x2 = c->arrows[u].src, y = p.ey[e];
        const auto& hl = c->hom(x2, y);
        int k = 0;
        while (hl[k] != r) ++k;
        return p.fibre_begin(x2, y) + k;
      },
      [&](const Profunctor& p, int v, int e) {
        int h = fibre_arrow(p, *c, e);
        int r = c->then(h, v);
        int x = p.ex[e], y2 = c->arrows[v].tgt;
        const auto& hl = c->hom(x, y2);
        int k = 0;
        while (hl[k] != r) ++k;
        return p.fibre_begin(x, y2) + k;
      });
}

// fibre (x,y) = D(Fx, y); elements are D-arrow names in hom order
ProfPtr representable_of(const CatFunctor& f) {
  const CatPtr c = f.src;
  const CatPtr d = f.tgt;
  auto pos_of = [&](int x, int y, int arrow) {
    const auto& hl = d->hom(f.omap[x], y);
    int k = 0;
    while (hl[k] != arrow) ++k;
    return k;
  };
  return build_profunctor(
      "rep(" + c->name + "->" + d->name + ")", c, d,
      [&](int x, int y) {
        std::vector<std::string> names;
        for (int a : d->hom(f.omap[x], y)) names.push_back(d->arrows[a].name);
        return names;
      },
      [&](const Profunctor& p, int u, int e) {
        int h = d->hom(f.omap[p.ex[e]], p.ey[e])[e - p.fibre_begin(p.ex[e], p.ey[e])];
        int r = d->then(f.amap[u], h);
        int x2 = c->arrows[u].src;
        return p.fibre_begin(x2, p.ey[e]) + pos_of(x2, p.ey[e], r);
      },
      [&](const Profunctor& p, int v, int e) {
        int h = d->hom(f.omap[p.ex[e]], p.ey[e])[e - p.fibre_begin(p.ex[e], p.ey[e])];
        int r = d->then(h, v);
        int y2 = d->arrows[v].tgt;
        return p.fibre_begin(p.ex[e], y2) + pos_of(p.ex[e], y2, r);
      });
}

// fibre (x,y) = C(x, Gy)
ProfPtr corepresentable_of(const CatFunctor& g) {
  const CatPtr d = g.src;  // G : D -> C
  const CatPtr c = g.tgt;
  auto pos_of = [&](int x, int y, int arrow) {
    const auto& hl = c->hom(x, g.omap[y]);
    int k = 0;
    while (hl[k] != arrow) ++k;
    return k;
  };
  return build_profunctor(
      "corep(" + c->name + "-|" + d->name + ")", c, d,
      [&](int x, int y) {
        std::vector<std::string> names;
        for (int a : c->hom(x, g.omap[y])) names.push_back(c->arrows[a].name);
        return names;
      },
      [&](const Profunctor& p, int u, int e) {
        int h = c->hom(p.ex[e], g.omap[p.ey[e]])[e - p.fibre_begin(p.ex[e], p.ey[e])];
        int r = c->then(u, h);
        int x2 = c->arrows[u].src;
        return p.fibre_begin(x2, p.ey[e]) + pos_of(x2, p.ey[e], r);
      },
      [&](const Profunctor& p, int v, int e) {
        int h = c->hom(p.ex[e], g.omap[p.ey[e]])[e - p.fibre_begin(p.ex[e], p.ey[e])];
        int r = c->then(h, g.amap[v]);
        int y2 = d->arrows[v].tgt;
        return p.fibre_begin(p.ex[e], y2) + pos_of(p.ex[e], y2, r);
      });
}

ProfPtr product_profunctor(const Profunctor& phi, const Profunctor& psi, const ProductCat& srcProd,
                           const ProductCat& tgtProd) {
  if (!cat_equal(*srcProd.left, *phi.src) || !cat_equal(*srcProd.right, *psi.src) ||
      !cat_equal(*tgtProd.left, *phi.tgt) || !cat_equal(*tgtProd.right, *psi.tgt))
    fail(ErrorCode::MismatchedEndpoints, "product_profunctor: categories do not match the products");
  const int nphi = phi.total();
  (void)nphi;
  auto pair_elem = [&](const Profunctor& p, int e1, int e2) {
    int X = srcProd.object_pair(phi.ex[e1], psi.ex[e2]);
    int Y = tgtProd.object_pair(phi.ey[e1], psi.ey[e2]);
    int k1 = e1 - phi.fibre_begin(phi.ex[e1], phi.ey[e1]);
    int k2 = e2 - psi.fibre_begin(psi.ex[e2], psi.ey[e2]);
    int w = psi.fibre_size(psi.ex[e2], psi.ey[e2]);
    return p.fibre_begin(X, Y) + k1 * w + k2;
  };
  auto parts = [&](const Profunctor& p, int e) {
    auto [x1, x2] = srcProd.object_parts(p.ex[e]);
    auto [y1, y2] = tgtProd.object_parts(p.ey[e]);
    int k = e - p.fibre_begin(p.ex[e], p.ey[e]);
    int w = psi.fibre_size(x2, y2);
    int e1 = phi.fibre_begin(x1, y1) + k / w;
    int e2 = psi.fibre_begin(x2, y2) + k % w;
    return std::make_pair(e1, e2);
  };
  return build_profunctor(
      "(" + phi.name + "x" + psi.name + ")", srcProd.cat, tgtProd.cat,
      [&](int X, int Y) {
        auto [x1, x2] = srcProd.object_parts(X);
        auto [y1, y2] = tgtProd.object_parts(Y);
        std::vector<std::string> names;
        int b1 = phi.fibre_begin(x1, y1), s1 = phi.fibre_size(x1, y1);
        int b2 = psi.fibre_begin(x2, y2), s2 = psi.fibre_size(x2, y2);
        names.reserve(static_cast<std::size_t>(s1) * s2);
        for (int i = 0; i < s1; ++i)
          for (int j = 0; j < s2; ++j)
            names.push_back(tuple_name({phi.elem_names[b1 + i], psi.elem_names[b2 + j]}));
        return names;
      },
      [&](const Profunctor& p, int u, int e) {
        auto [e1, e2] = parts(p, e);
        auto [u1, u2] = srcProd.arrow_parts(u);
        return pair_elem(p, phi.left(u1, e1), psi.left(u2, e2));
      },
      [&](const Profunctor& p, int v, int e) {
        auto [e1, e2] = parts(p, e);
        auto [v1, v2] = tgtProd.arrow_parts(v);
        return pair_elem(p, phi.right(v1, e1), psi.right(v2, e2));
      });
}

bool prof_tables_equal(const Profunctor& a, const Profunctor& b, std::string* why) {
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!cat_equal(*a.src, *b.src) || !cat_equal(*a.tgt, *b.tgt))
    return explain("boundary categories differ");
  if (a.elem_names != b.elem_names) return explain("fibre element lists differ");
  if (a.offsets != b.offsets) return explain("fibre layout differs");
  if (a.lact != b.lact) return explain("left actions differ");
  if (a.ract != b.ract) return explain("right actions differ");
  return true;
}

// -----------------------------------------------------------------------------
// Cells
// -----------------------------------------------------------------------------

ProfCell identity_cell(const ProfPtr& phi) {
  ProfCell cell;
  cell.from = phi;
  cell.to = phi;
  cell.top = identity_functor(phi->src);
  cell.bottom = identity_functor(phi->tgt);
  cell.comp.resize(phi->total());
  std::iota(cell.comp.begin(), cell.comp.end(), 0);
  return cell;
}

CellVerdict check_cell(const ProfCell& cell) {
  const Profunctor& p = *cell.from;
  const Profunctor& q = *cell.to;
  if (!cat_equal(*cell.top.src, *p.src) || !cat_equal(*cell.top.tgt, *q.src) ||
      !cat_equal(*cell.bottom.src, *p.tgt) || !cat_equal(*cell.bottom.tgt, *q.tgt))
    return {false, "cell boundary mismatch"};
  if (static_cast<int>(cell.comp.size()) != p.total()) return {false, "component table size mismatch"};
  for (int e = 0; e < p.total(); ++e) {
    int r = cell.comp[e];
    if (r < 0 || r >= q.total() || q.ex[r] != cell.top.omap[p.ex[e]] ||
        q.ey[r] != cell.bottom.omap[p.ey[e]])
      return {false, "component at '" + p.elem_names[e] + "' " + p.elem_coord(e) +
                         " lands outside the expected fibre"};
  }
  const FinCat& c = *p.src;
  const FinCat& d = *p.tgt;
  for (int u = 0; u < c.num_arrows(); ++u)
    for (int e = 0; e < p.total(); ++e) {
      if (p.ex[e] != c.arrows[u].tgt) continue;
      if (cell.comp[p.left(u, e)] != q.left(cell.top.amap[u], cell.comp[e]))
        return {false, "left naturality fails at arrow '" + c.arrows[u].name + "', element '" +
                           p.elem_names[e] + "' " + p.elem_coord(e)};
    }
  for (int v = 0; v < d.num_arrows(); ++v)
    for (int e = 0; e < p.total(); ++e) {
      if (p.ey[e] != d.arrows[v].src) continue;
      if (cell.comp[p.right(v, e)] != q.right(cell.bottom.amap[v], cell.comp[e]))
        return {false, "right naturality fails at arrow '" + d.arrows[v].name + "', element '" +
                           p.elem_names[e] + "' " + p.elem_coord(e)};
    }
  return {true, ""};
}

ProfCell paste_horizontal(const ProfCell& alpha, const ProfCell& beta) {
  std::string why;
  if (!prof_tables_equal(*alpha.to, *beta.from, &why))
    fail(ErrorCode::MismatchedEndpoints, "paste_horizontal: middle proarrow mismatch (" + why + ")");
  ProfCell cell;
  cell.from = alpha.from;
  cell.to = beta.to;
  cell.top = compose(alpha.top, beta.top);
  cell.bottom = compose(alpha.bottom, beta.bottom);
  cell.comp.resize(alpha.comp.size());
  for (std::size_t e = 0; e < alpha.comp.size(); ++e) cell.comp[e] = beta.comp[alpha.comp[e]];
  return cell;
}

// -----------------------------------------------------------------------------
// Coend composition
// -----------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;

  explicit UnionFind(std::int64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  // union keeping the smaller index as root, so the canonical representative
  // of every class is its least raw pair
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

}  // namespace

std::int64_t CoendResult::raw_index(int phi_elem, int psi_elem) const {
  return prefix[phi_elem] + (psi_elem - psi_block_begin[phi->ey[phi_elem]]);
}

std::pair<int, int> CoendResult::raw_pair(std::int64_t raw) const {
  // binary search the prefix array for the φ component
  int lo = 0, hi = static_cast<int>(prefix.size()) - 1;
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (prefix[mid] <= raw)
      lo = mid;
    else
      hi = mid;
  }
  int ph = lo;
  int ps = psi_block_begin[phi->ey[ph]] + static_cast<int>(raw - prefix[ph]);
  return {ph, ps};
}

CoendResult compose_profunctors(const ProfPtr& phi, const ProfPtr& psi) {
  if (!cat_equal(*phi->tgt, *psi->src))
    fail(ErrorCode::MismatchedEndpoints,
         "compose_profunctors: middle categories differ (" + phi->name + " ; " + psi->name + ")");
  const FinCat& middle = *phi->tgt;
  CoendResult ce;
  ce.phi = phi;
  ce.psi = psi;

  // ψ elements are laid out lex by (middle object, z, k): contiguous per middle
  const int ny = middle.num_objects();
  ce.psi_block_begin.assign(ny + 1, psi->total());
  for (int e = psi->total() - 1; e >= 0; --e) ce.psi_block_begin[psi->ex[e]] = e;
  for (int y = ny - 1; y >= 0; --y)
    if (ce.psi_block_begin[y] == psi->total() && ce.psi_block_begin[y + 1] != psi->total())
      ce.psi_block_begin[y] = ce.psi_block_begin[y + 1];
  // fix empty blocks: block y spans [begin[y], begin[y+1])
  for (int y = ny - 1; y >= 0; --y)
    if (ce.psi_block_begin[y] > ce.psi_block_begin[y + 1])
      ce.psi_block_begin[y] = ce.psi_block_begin[y + 1];

  auto psi_block_size = [&](int y) { return ce.psi_block_begin[y + 1] - ce.psi_block_begin[y]; };

  ce.prefix.assign(phi->total() + 1, 0);
  for (int e = 0; e < phi->total(); ++e)
    ce.prefix[e + 1] = ce.prefix[e] + psi_block_size(phi->ey[e]);
  ce.raw_total = ce.prefix[phi->total()];
  if (ce.raw_total > (std::int64_t(1) << 31) - 2)
    fail(ErrorCode::SizeExceeded, "coend raw pair space too large");

  UnionFind uf(ce.raw_total);
  // middle action relation: (φ·m, ψ) ~ (φ, m·ψ) for m : y -> y'
  std::vector<std::vector<int>> phis_by_middle(ny);
  for (int e = 0; e < phi->total(); ++e) phis_by_middle[phi->ey[e]].push_back(e);
  for (int m = 0; m < middle.num_arrows(); ++m) {
    const Arrow& am = middle.arrows[m];
    if (m == middle.identity[am.src]) continue;
    int y = am.src, y2 = am.tgt;
    for (int ph : phis_by_middle[y]) {
      int ph2 = phi->right(m, ph);  // φ·m at middle y2
      for (int ps = ce.psi_block_begin[y2]; ps < ce.psi_block_begin[y2 + 1]; ++ps) {
        int ps2 = psi->left(m, ps);  // m·ψ at middle y
        uf.unite(static_cast<std::int32_t>(ce.raw_index(ph2, ps)),
                 static_cast<std::int32_t>(ce.raw_index(ph, ps2)));
      }
    }
  }

  // classes grouped by (x,z) fibre, ordered by representative raw index
  const int nx = phi->src->num_objects();
  const int nz = psi->tgt->num_objects();
  std::vector<std::vector<std::int64_t>> reps_by_fibre(static_cast<std::size_t>(nx) * nz);
  for (std::int64_t raw = 0; raw < ce.raw_total; ++raw) {
    if (uf.find(static_cast<std::int32_t>(raw)) != raw) continue;
    auto [ph, ps] = ce.raw_pair(raw);
    reps_by_fibre[static_cast<std::size_t>(phi->ex[ph]) * nz + psi->ey[ps]].push_back(raw);
  }

  auto comp = std::make_shared<Profunctor>();
  comp->name = "(" + phi->name + ";" + psi->name + ")";
  comp->src = phi->src;
  comp->tgt = psi->tgt;
  comp->offsets.assign(static_cast<std::size_t>(nx) * nz + 1, 0);
  std::vector<std::int64_t> rep_raw;
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      comp->offsets[x * nz + z] = static_cast<int>(comp->elem_names.size());
      for (std::int64_t raw : reps_by_fibre[static_cast<std::size_t>(x) * nz + z]) {
        auto [ph, ps] = ce.raw_pair(raw);
        comp->elem_names.push_back("[" + phi->elem_names[ph] + ";" + psi->elem_names[ps] + "]");
        comp->ex.push_back(x);
        comp->ey.push_back(z);
        rep_raw.push_back(raw);
      }
    }
  comp->offsets[static_cast<std::size_t>(nx) * nz] = static_cast<int>(comp->elem_names.size());

  // raw -> composite flat element
  ce.class_of_raw.assign(ce.raw_total, -1);
  for (int e = 0; e < comp->total(); ++e)
    ce.class_of_raw[rep_raw[e]] = e;
  for (std::int64_t raw = 0; raw < ce.raw_total; ++raw)
    ce.class_of_raw[raw] = ce.class_of_raw[uf.find(static_cast<std::int32_t>(raw))];

  // induced actions on representatives
  const FinCat& csrc = *phi->src;
  const FinCat& ctgt = *psi->tgt;
  const int total = comp->total();
  comp->lact.assign(static_cast<std::size_t>(csrc.num_arrows()) * total, -1);
  comp->ract.assign(static_cast<std::size_t>(ctgt.num_arrows()) * total, -1);
  for (int u = 0; u < csrc.num_arrows(); ++u) {
    int utgt = csrc.arrows[u].tgt;
    for (int e = 0; e < total; ++e) {
      if (comp->ex[e] != utgt) continue;
      auto [ph, ps] = ce.raw_pair(rep_raw[e]);
      int ph2 = phi->left(u, ph);
      comp->lact[static_cast<std::size_t>(u) * total + e] =
          ce.class_of_raw[ce.raw_index(ph2, ps)];
    }
  }
  for (int v = 0; v < ctgt.num_arrows(); ++v) {
    int vsrc = ctgt.arrows[v].src;
    for (int e = 0; e < total; ++e) {
      if (comp->ey[e] != vsrc) continue;
      auto [ph, ps] = ce.raw_pair(rep_raw[e]);
      int ps2 = psi->right(v, ps);
      comp->ract[static_cast<std::size_t>(v) * total + e] =
          ce.class_of_raw[ce.raw_index(ph, ps2)];
    }
  }

  ce.rep_raw = std::move(rep_raw);
  ce.composite = comp;
  return ce;
}

ProfCell paste_vertical(const ProfCell& alpha, const ProfCell& beta, const CoendResult& src,
                        const CoendResult& dst) {
  if (!functor_equal(alpha.bottom, beta.top))
    fail(ErrorCode::MismatchedEndpoints, "paste_vertical: middle boundary functors differ");
  std::string why;
  if (!prof_tables_equal(*src.phi, *alpha.from, &why) ||
      !prof_tables_equal(*src.psi, *beta.from, &why) ||
      !prof_tables_equal(*dst.phi, *alpha.to, &why) || !prof_tables_equal(*dst.psi, *beta.to, &why))
    fail(ErrorCode::MismatchedEndpoints, "paste_vertical: coends do not match the cells (" + why + ")");
  ProfCell cell;
  cell.from = src.composite;
  cell.to = dst.composite;
  cell.top = alpha.top;
  cell.bottom = beta.bottom;
  cell.comp.resize(src.composite->total());
  for (int e = 0; e < src.composite->total(); ++e) {
    auto [ph, ps] = src.raw_pair(src.rep_raw[e]);
    cell.comp[e] = dst.class_of_raw[dst.raw_index(alpha.comp[ph], beta.comp[ps])];
  }
  return cell;
}

std::vector<int> unit_left_comparison(const CoendResult& ce) {
  // ce = coend(hom_C, Φ): [(u, e)] -> u·e
  const FinCat& c = *ce.phi->src;
  std::vector<int> out(ce.composite->total());
  for (int k = 0; k < ce.composite->total(); ++k) {
    auto [ph, ps] = ce.raw_pair(ce.rep_raw[k]);
    int arrow = c.hom(ce.phi->ex[ph], ce.phi->ey[ph])[ph - ce.phi->fibre_begin(ce.phi->ex[ph], ce.phi->ey[ph])];
    out[k] = ce.psi->left(arrow, ps);
  }
  return out;
}

std::vector<int> unit_right_comparison(const CoendResult& ce) {
  // ce = coend(Φ, hom_D): [(e, v)] -> e·v
  const FinCat& d = *ce.psi->src;
  std::vector<int> out(ce.composite->total());
  for (int k = 0; k < ce.composite->total(); ++k) {
    auto [ph, ps] = ce.raw_pair(ce.rep_raw[k]);
    int arrow = d.hom(ce.psi->ex[ps], ce.psi->ey[ps])[ps - ce.psi->fibre_begin(ce.psi->ex[ps], ce.psi->ey[ps])];
    out[k] = ce.phi->right(arrow, ph);
  }
  return out;
}

// -----------------------------------------------------------------------------
// Profunctor isomorphism search
// -----------------------------------------------------------------------------

CellVerdict check_prof_iso(const ProfIso& iso) {
  const Profunctor& p = *iso.from;
  const Profunctor& q = *iso.to;
  if (!cat_equal(*p.src, *q.src) || !cat_equal(*p.tgt, *q.tgt))
    return {false, "profunctors are not parallel"};
  std::vector<char> hit(q.total(), 0);
  for (int e = 0; e < p.total(); ++e) {
    int r = iso.fwd[e];
    if (r < 0 || r >= q.total() || q.ex[r] != p.ex[e] || q.ey[r] != p.ey[e])
      return {false, "image of '" + p.elem_names[e] + "' leaves its fibre"};
    if (hit[r]) return {false, "not injective at '" + p.elem_names[e] + "'"};
    hit[r] = 1;
  }
  for (char h : hit)
    if (!h) return {false, "not surjective"};
  const FinCat& c = *p.src;
  const FinCat& d = *p.tgt;
  for (int u = 0; u < c.num_arrows(); ++u)
    for (int e = 0; e < p.total(); ++e) {
      if (p.ex[e] != c.arrows[u].tgt) continue;
      if (iso.fwd[p.left(u, e)] != q.left(u, iso.fwd[e]))
        return {false, "left naturality fails at ('" + c.arrows[u].name + "','" + p.elem_names[e] + "')"};
    }
  for (int v = 0; v < d.num_arrows(); ++v)
    for (int e = 0; e < p.total(); ++e) {
      if (p.ey[e] != d.arrows[v].src) continue;
      if (iso.fwd[p.right(v, e)] != q.right(v, iso.fwd[e]))
        return {false, "right naturality fails at ('" + d.arrows[v].name + "','" + p.elem_names[e] + "')"};
    }
  return {true, ""};
}

namespace {

struct IsoSearch {
  const Profunctor& p;
  const Profunctor& q;
  std::int64_t budget;
  std::int64_t steps = 0;
  bool exhausted = false;
  std::vector<std::int32_t> fwd;   // p-elem -> q-elem or -1
  std::vector<std::int32_t> back;  // q-elem -> p-elem or -1

  IsoSearch(const Profunctor& p_, const Profunctor& q_, std::int64_t b)
      : p(p_), q(q_), budget(b), fwd(p_.total(), -1), back(q_.total(), -1) {}

  // check all naturality instances that involve element e and are fully decided
  bool consistent(int e) {
    const FinCat& c = *p.src;
    const FinCat& d = *p.tgt;
    for (int u = 0; u < c.num_arrows(); ++u) {
      const Arrow& au = c.arrows[u];
      if (au.tgt == p.ex[e]) {
        int e2 = p.left(u, e);
        if (fwd[e2] >= 0 && fwd[e2] != q.left(u, fwd[e])) return false;
      }
      if (au.src == p.ex[e]) {
        // e as an image: instances (u, a) with lact(u,a) == e
        for (int a = 0; a < p.total(); ++a) {
          if (p.ex[a] != au.tgt || p.ey[a] != p.ey[e]) continue;
          if (p.left(u, a) != e || fwd[a] < 0) continue;
          if (fwd[e] != q.left(u, fwd[a])) return false;
        }
      }
    }
    for (int v = 0; v < d.num_arrows(); ++v) {
      const Arrow& av = d.arrows[v];
      if (av.src == p.ey[e]) {
        int e2 = p.right(v, e);
        if (fwd[e2] >= 0 && fwd[e2] != q.right(v, fwd[e])) return false;
      }
      if (av.tgt == p.ey[e]) {
        for (int a = 0; a < p.total(); ++a) {
          if (p.ey[a] != av.src || p.ex[a] != p.ex[e]) continue;
          if (p.right(v, a) != e || fwd[a] < 0) continue;
          if (fwd[e] != q.right(v, fwd[a])) return false;
        }
      }
    }
    return true;
  }

  bool dfs(int e) {
    if (e == p.total()) return true;
    int x = p.ex[e], y = p.ey[e];
    int qb = q.fibre_begin(x, y), qs = q.fibre_size(x, y);
    for (int k = 0; k < qs; ++k) {
      int cand = qb + k;
      if (back[cand] >= 0) continue;
      if (++steps > budget) {
        exhausted = true;
        return false;
      }
      fwd[e] = cand;
      back[cand] = e;
      if (consistent(e) && dfs(e + 1)) return true;
      fwd[e] = -1;
      back[cand] = -1;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

ProfIsoResult find_profunctor_iso(const ProfPtr& phi, const ProfPtr& psi, std::int64_t budget) {
  ProfIsoResult res;
  if (!cat_equal(*phi->src, *psi->src) || !cat_equal(*phi->tgt, *psi->tgt))
    fail(ErrorCode::MismatchedEndpoints, "find_profunctor_iso: profunctors are not parallel");
  for (int x = 0; x < phi->src->num_objects(); ++x)
    for (int y = 0; y < phi->tgt->num_objects(); ++y)
      if (phi->fibre_size(x, y) != psi->fibre_size(x, y)) {
        res.status = SearchStatus::NotIsomorphic;
        res.obstruction = "fibre size mismatch at (" + phi->src->objects[x] + "," +
                          phi->tgt->objects[y] + "): " + std::to_string(phi->fibre_size(x, y)) +
                          " vs " + std::to_string(psi->fibre_size(x, y));
        return res;
      }
  IsoSearch search(*phi, *psi, budget);
  if (search.dfs(0)) {
    res.status = SearchStatus::Found;
    res.iso.from = phi;
    res.iso.to = psi;
    res.iso.fwd = search.fwd;
    res.steps = search.steps;
    return res;
  }
  if (search.exhausted) {
    res.status = SearchStatus::BudgetExceeded;
    res.obstruction = "budget exhausted after " + std::to_string(search.steps) + " extensions";
    res.steps = search.steps;
    return res;
  }
  res.status = SearchStatus::NotIsomorphic;
  res.obstruction = "fibrewise bijection search found a naturality obstruction";
  res.steps = search.steps;
  return res;
}

}  // namespace dfop::fincat
