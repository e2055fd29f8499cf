#include "dfop/fincat.hpp"

#include <algorithm>

namespace dfop::fincat {

int FinCat::object_index(const std::string& o) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects[i] == o) return i;
  return -1;
}

int FinCat::arrow_index(const std::string& a) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == a) return i;
  return -1;
}

CatPtr make_fincat(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
                   std::vector<int> identity,
                   const std::vector<std::tuple<int, int, int>>& comp) {
  auto c = std::make_shared<FinCat>();
  c->name = std::move(name);
  c->objects = std::move(objects);
  c->arrows = std::move(arrows);
  c->identity = std::move(identity);
  const int nobj = c->num_objects();
  const int narr = c->num_arrows();
  if (static_cast<int>(c->identity.size()) != nobj)
    fail(ErrorCode::ValidationError, "category '" + c->name + "': identity table size mismatch");
  c->hom_.assign(static_cast<std::size_t>(nobj) * nobj, {});
  for (int a = 0; a < narr; ++a) {
    const Arrow& ar = c->arrows[a];
    if (ar.src < 0 || ar.src >= nobj || ar.tgt < 0 || ar.tgt >= nobj)
      fail(ErrorCode::ValidationError, "category '" + c->name + "': arrow endpoint out of range");
    c->hom_[static_cast<std::size_t>(ar.src) * nobj + ar.tgt].push_back(a);
  }
  const bool dense = narr <= 1024;
  if (dense)
    c->comp_matrix_.assign(static_cast<std::size_t>(narr) * narr, -1);
  auto set_comp = [&](int f, int g, int h) {
    if (dense)
      c->comp_matrix_[static_cast<std::size_t>(f) * narr + g] = h;
    else
      c->comp_map_[FinCat::pack(f, g)] = h;
  };
  for (const auto& [f, g, h] : comp) {
    if (f < 0 || f >= narr || g < 0 || g >= narr || h < 0 || h >= narr)
      fail(ErrorCode::ValidationError, "category '" + c->name + "': composition entry out of range");
    if (c->arrows[f].tgt != c->arrows[g].src)
      fail(ErrorCode::ValidationError, "category '" + c->name + "': composition entry " +
                                            c->arrows[f].name + ";" + c->arrows[g].name +
                                            " is not composable");
    set_comp(f, g, h);
  }
  // identity compositions are implied when absent
  for (int a = 0; a < narr; ++a) {
    const Arrow& ar = c->arrows[a];
    if (c->then(c->identity[ar.src], a) < 0) set_comp(c->identity[ar.src], a, a);
    if (c->then(a, c->identity[ar.tgt]) < 0) set_comp(a, c->identity[ar.tgt], a);
  }
  c->inverse_.assign(narr, -1);
  for (int f = 0; f < narr; ++f) {
    const Arrow& ar = c->arrows[f];
    for (int g : c->hom(ar.tgt, ar.src))
      if (c->then(f, g) == c->identity[ar.src] && c->then(g, f) == c->identity[ar.tgt]) {
        c->inverse_[f] = g;
        break;
      }
  }
  return c;
}

CatPtr terminal_category() {
  return make_fincat("1", {"*"}, {Arrow{"id_*", 0, 0}}, {0}, {});
}

CatPtr chain_category(int n) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<std::vector<int>> at(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      at[i][j] = static_cast<int>(arrows.size());
      arrows.push_back(Arrow{i == j ? "id_" + objects[i] : "le_" + objects[i] + objects[j], i, j});
    }
  for (int i = 0; i < n; ++i) identity.push_back(at[i][i]);
  std::vector<std::tuple<int, int, int>> comp;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) comp.emplace_back(at[i][j], at[j][k], at[i][k]);
  return make_fincat("chain" + std::to_string(n), std::move(objects), std::move(arrows),
                     std::move(identity), comp);
}

CatPtr discrete_category(const std::vector<std::string>& objects) {
  std::vector<Arrow> arrows;
  std::vector<int> identity;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    identity.push_back(static_cast<int>(i));
    arrows.push_back(Arrow{"id_" + objects[i], static_cast<int>(i), static_cast<int>(i)});
  }
  return make_fincat("disc", objects, std::move(arrows), std::move(identity), {});
}

bool cat_equal(const FinCat& a, const FinCat& b) {
  if (a.objects != b.objects || a.identity != b.identity) return false;
  if (a.num_arrows() != b.num_arrows()) return false;
  for (int i = 0; i < a.num_arrows(); ++i)
    if (a.arrows[i].name != b.arrows[i].name || a.arrows[i].src != b.arrows[i].src ||
        a.arrows[i].tgt != b.arrows[i].tgt)
      return false;
  for (int f = 0; f < a.num_arrows(); ++f)
    for (int g = 0; g < a.num_arrows(); ++g)
      if (a.then(f, g) != b.then(f, g)) return false;
  return true;
}

CatVerdict check_category(const FinCat& c) {
  for (int x = 0; x < c.num_objects(); ++x) {
    int id = c.identity[x];
    if (id < 0 || id >= c.num_arrows() || c.arrows[id].src != x || c.arrows[id].tgt != x)
      return {false, "identity of object '" + c.objects[x] + "' has wrong endpoints"};
  }
  for (int f = 0; f < c.num_arrows(); ++f) {
    const Arrow& af = c.arrows[f];
    if (c.then(c.identity[af.src], f) != f)
      return {false, "left identity law fails at arrow '" + af.name + "'"};
    if (c.then(f, c.identity[af.tgt]) != f)
      return {false, "right identity law fails at arrow '" + af.name + "'"};
    for (int g = 0; g < c.num_arrows(); ++g) {
      const Arrow& ag = c.arrows[g];
      if (af.tgt != ag.src) continue;
      int fg = c.then(f, g);
      if (fg < 0) return {false, "composition undefined on composable pair ('" + af.name + "','" + ag.name + "')"};
      if (c.arrows[fg].src != af.src || c.arrows[fg].tgt != ag.tgt)
        return {false, "composite of ('" + af.name + "','" + ag.name + "') has wrong endpoints"};
      for (int h = 0; h < c.num_arrows(); ++h) {
        const Arrow& ah = c.arrows[h];
        if (ag.tgt != ah.src) continue;
        if (c.then(fg, h) != c.then(f, c.then(g, h)))
          return {false, "associativity fails on triple ('" + af.name + "','" + ag.name + "','" +
                             ah.name + "')"};
      }
    }
  }
  return {true, ""};
}

// -----------------------------------------------------------------------------

CatFunctor identity_functor(const CatPtr& c) {
  CatFunctor f;
  f.src = c;
  f.tgt = c;
  f.omap.resize(c->num_objects());
  f.amap.resize(c->num_arrows());
  for (int i = 0; i < c->num_objects(); ++i) f.omap[i] = i;
  for (int i = 0; i < c->num_arrows(); ++i) f.amap[i] = i;
  return f;
}

CatFunctor compose(const CatFunctor& f, const CatFunctor& g) {
  if (!cat_equal(*f.tgt, *g.src))
    fail(ErrorCode::MismatchedEndpoints, "functor composition endpoint mismatch");
  CatFunctor h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.omap.resize(f.omap.size());
  h.amap.resize(f.amap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i) h.omap[i] = g.omap[f.omap[i]];
  for (std::size_t i = 0; i < f.amap.size(); ++i) h.amap[i] = g.amap[f.amap[i]];
  return h;
}

CatFunctor constant_functor(const CatPtr& src, const CatPtr& tgt, int object) {
  CatFunctor f;
  f.src = src;
  f.tgt = tgt;
  f.omap.assign(src->num_objects(), object);
  f.amap.assign(src->num_arrows(), tgt->identity[object]);
  return f;
}

CatVerdict check_functor(const CatFunctor& f) {
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  for (int a = 0; a < c.num_arrows(); ++a) {
    const Arrow& ar = c.arrows[a];
    const Arrow& im = d.arrows[f.amap[a]];
    if (im.src != f.omap[ar.src] || im.tgt != f.omap[ar.tgt])
      return {false, "functor breaks endpoints at arrow '" + ar.name + "'"};
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (f.amap[c.identity[x]] != d.identity[f.omap[x]])
      return {false, "functor breaks identity at object '" + c.objects[x] + "'"};
  for (int a = 0; a < c.num_arrows(); ++a)
    for (int b = 0; b < c.num_arrows(); ++b) {
      if (c.arrows[a].tgt != c.arrows[b].src) continue;
      if (f.amap[c.then(a, b)] != d.then(f.amap[a], f.amap[b]))
        return {false, "functor breaks composition on ('" + c.arrows[a].name + "','" +
                           c.arrows[b].name + "')"};
    }
  return {true, ""};
}

bool functor_equal(const CatFunctor& f, const CatFunctor& g) {
  return f.omap == g.omap && f.amap == g.amap && cat_equal(*f.src, *g.src) &&
         cat_equal(*f.tgt, *g.tgt);
}

// -----------------------------------------------------------------------------
// Power categories
// -----------------------------------------------------------------------------

int Power::object_component(int X, int i) const {
  int n = base->num_objects();
  for (int k = exponent - 1; k > i; --k) X /= n;
  return X % n;
}

std::vector<int> Power::object_components(int X) const {
  std::vector<int> radices(exponent, base->num_objects());
  return radix_decode(X, radices);
}

int Power::object_of_components(const std::vector<int>& comps) const {
  std::vector<int> radices(exponent, base->num_objects());
  return static_cast<int>(radix_encode(comps, radices));
}

std::vector<int> Power::arrow_components(int u) const {
  const Arrow& ar = cat->arrows[u];
  std::vector<int> xs = object_components(ar.src);
  std::vector<int> ys = object_components(ar.tgt);
  // position within hom(X,Y)
  const std::vector<int>& homs = cat->hom(ar.src, ar.tgt);
  int k = 0;
  while (homs[k] != u) ++k;
  std::vector<int> radices(exponent), digits;
  for (int i = 0; i < exponent; ++i)
    radices[i] = static_cast<int>(base->hom(xs[i], ys[i]).size());
  digits = radix_decode(k, radices);
  std::vector<int> comps(exponent);
  for (int i = 0; i < exponent; ++i) comps[i] = base->hom(xs[i], ys[i])[digits[i]];
  return comps;
}

int Power::arrow_of_components(int X, int Y, const std::vector<int>& comps) const {
  std::vector<int> xs = object_components(X);
  std::vector<int> ys = object_components(Y);
  std::vector<int> radices(exponent), digits(exponent);
  for (int i = 0; i < exponent; ++i) {
    const std::vector<int>& h = base->hom(xs[i], ys[i]);
    radices[i] = static_cast<int>(h.size());
    int pos = -1;
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] == comps[i]) {
        pos = static_cast<int>(k);
        break;
      }
    if (pos < 0) fail(ErrorCode::Internal, "arrow component not in hom set");
    digits[i] = pos;
  }
  int k = static_cast<int>(radix_encode(digits, radices));
  return cat->hom(X, Y)[k];
}

Power power_category(const CatPtr& base, int exponent, const SizeLimits& limits) {
  const int nb = base->num_objects();
  double obj_count = 1;
  for (int i = 0; i < exponent; ++i) obj_count *= nb;
  if (obj_count > limits.max_objects)
    fail(ErrorCode::SizeExceeded, "power category would have " + std::to_string((long long)obj_count) +
                                      " objects (limit " + std::to_string(limits.max_objects) + ")");
  const int nobj = static_cast<int>(obj_count);

  std::vector<std::string> objects(nobj);
  std::vector<int> oradices(exponent, nb);
  for (int X = 0; X < nobj; ++X) {
    std::vector<int> comps = radix_decode(X, oradices);
    std::vector<std::string> parts(exponent);
    for (int i = 0; i < exponent; ++i) parts[i] = base->objects[comps[i]];
    objects[X] = tuple_name(parts);
  }

  std::vector<Arrow> arrows;
  std::vector<int> identity(nobj, -1);
  // enumerate per (X,Y) the mixed-radix tuples of component arrows
  std::int64_t arrow_guard = 0;
  for (int X = 0; X < nobj; ++X) {
    std::vector<int> xs = radix_decode(X, oradices);
    for (int Y = 0; Y < nobj; ++Y) {
      std::vector<int> ys = radix_decode(Y, oradices);
      std::vector<int> radices(exponent);
      std::int64_t count = 1;
      for (int i = 0; i < exponent; ++i) {
        radices[i] = static_cast<int>(base->hom(xs[i], ys[i]).size());
        count *= radices[i];
      }
      if (count == 0) continue;
      arrow_guard += count;
      if (arrow_guard > limits.max_arrows)
        fail(ErrorCode::SizeExceeded, "power category arrow count exceeds limit " +
                                          std::to_string(limits.max_arrows));
      for (std::int64_t k = 0; k < count; ++k) {
        std::vector<int> digits = radix_decode(k, radices);
        std::vector<std::string> parts(exponent);
        bool is_id = (X == Y);
        for (int i = 0; i < exponent; ++i) {
          int comp_arrow = base->hom(xs[i], ys[i])[digits[i]];
          parts[i] = base->arrows[comp_arrow].name;
          if (comp_arrow != base->identity[xs[i]]) is_id = false;
        }
        if (is_id) identity[X] = static_cast<int>(arrows.size());
        arrows.push_back(Arrow{tuple_name(parts), X, Y});
      }
    }
  }

  Power pw;
  pw.base = base;
  pw.exponent = exponent;

  // composition: componentwise; build after the shell so we can use decoders
  auto shell = std::make_shared<FinCat>();
  shell->name = base->name + "^" + std::to_string(exponent);
  shell->objects = objects;
  shell->arrows = arrows;
  shell->identity = identity;
  const int nobj2 = nobj;
  shell->hom_.assign(static_cast<std::size_t>(nobj2) * nobj2, {});
  for (int a = 0; a < shell->num_arrows(); ++a)
    shell->hom_[static_cast<std::size_t>(shell->arrows[a].src) * nobj2 + shell->arrows[a].tgt]
        .push_back(a);
  pw.cat = shell;

  std::vector<std::tuple<int, int, int>> comp;
  for (int f = 0; f < shell->num_arrows(); ++f) {
    std::vector<int> fc = pw.arrow_components(f);
    const Arrow& af = shell->arrows[f];
    for (int g = 0; g < shell->num_arrows(); ++g) {
      const Arrow& ag = shell->arrows[g];
      if (af.tgt != ag.src) continue;
      std::vector<int> gc = pw.arrow_components(g);
      std::vector<int> hc(exponent);
      for (int i = 0; i < exponent; ++i) hc[i] = base->then(fc[i], gc[i]);
      comp.emplace_back(f, g, pw.arrow_of_components(af.src, ag.tgt, hc));
    }
  }
  pw.cat = make_fincat(shell->name, std::move(objects), std::move(arrows), std::move(identity), comp);
  return pw;
}

CatFunctor reindex_functor(const Power& powK, const Power& powJ, const finset::FinMap& l) {
  if (l.source.size() != powJ.exponent || l.target.size() != powK.exponent)
    fail(ErrorCode::MismatchedEndpoints, "reindex_functor: map shape does not match powers");
  CatFunctor f;
  f.src = powK.cat;
  f.tgt = powJ.cat;
  f.omap.resize(powK.cat->num_objects());
  f.amap.resize(powK.cat->num_arrows());
  for (int X = 0; X < powK.cat->num_objects(); ++X) {
    std::vector<int> xs = powK.object_components(X);
    std::vector<int> ys(powJ.exponent);
    for (int j = 0; j < powJ.exponent; ++j) ys[j] = xs[l.assign[j]];
    f.omap[X] = powJ.object_of_components(ys);
  }
  for (int u = 0; u < powK.cat->num_arrows(); ++u) {
    std::vector<int> us = powK.arrow_components(u);
    std::vector<int> vs(powJ.exponent);
    for (int j = 0; j < powJ.exponent; ++j) vs[j] = us[l.assign[j]];
    const Arrow& au = powK.cat->arrows[u];
    f.amap[u] = powJ.arrow_of_components(f.omap[au.src], f.omap[au.tgt], vs);
  }
  return f;
}

// -----------------------------------------------------------------------------
// Product categories
// -----------------------------------------------------------------------------

int ProductCat::object_pair(int a, int b) const { return a * right->num_objects() + b; }

std::pair<int, int> ProductCat::object_parts(int X) const {
  return {X / right->num_objects(), X % right->num_objects()};
}

int ProductCat::arrow_pair(int u, int v) const {
  const Arrow& au = left->arrows[u];
  const Arrow& av = right->arrows[v];
  int X = object_pair(au.src, av.src);
  int Y = object_pair(au.tgt, av.tgt);
  // position: hom lists are enumerated (u-pos major, v-pos minor)
  const auto& hl = left->hom(au.src, au.tgt);
  const auto& hr = right->hom(av.src, av.tgt);
  int pu = 0, pv = 0;
  while (hl[pu] != u) ++pu;
  while (hr[pv] != v) ++pv;
  return cat->hom(X, Y)[pu * static_cast<int>(hr.size()) + pv];
}

std::pair<int, int> ProductCat::arrow_parts(int w) const {
  const Arrow& aw = cat->arrows[w];
  auto [xs1, xs2] = object_parts(aw.src);
  auto [ys1, ys2] = object_parts(aw.tgt);
  const auto& hl = left->hom(xs1, ys1);
  const auto& hr = right->hom(xs2, ys2);
  const auto& hw = cat->hom(aw.src, aw.tgt);
  int k = 0;
  while (hw[k] != w) ++k;
  return {hl[k / static_cast<int>(hr.size())], hr[k % static_cast<int>(hr.size())]};
}

ProductCat product_category(const CatPtr& a, const CatPtr& b, const SizeLimits& limits) {
  std::int64_t nobj = static_cast<std::int64_t>(a->num_objects()) * b->num_objects();
  if (nobj > limits.max_objects)
    fail(ErrorCode::SizeExceeded, "product category object count exceeds limit");
  std::vector<std::string> objects(nobj);
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y)
      objects[x * b->num_objects() + y] = "(" + a->objects[x] + "," + b->objects[y] + ")";

  std::vector<Arrow> arrows;
  std::vector<int> identity(nobj, -1);
  std::int64_t guard = 0;
  for (int X = 0; X < nobj; ++X)
    for (int Y = 0; Y < nobj; ++Y) {
      int x1 = X / b->num_objects(), x2 = X % b->num_objects();
      int y1 = Y / b->num_objects(), y2 = Y % b->num_objects();
      const auto& hl = a->hom(x1, y1);
      const auto& hr = b->hom(x2, y2);
      guard += static_cast<std::int64_t>(hl.size()) * hr.size();
      if (guard > limits.max_arrows)
        fail(ErrorCode::SizeExceeded, "product category arrow count exceeds limit");
      for (int u : hl)
        for (int v : hr) {
          bool is_id = (u == a->identity[x1]) && (v == b->identity[x2]) && X == Y;
          if (is_id) identity[X] = static_cast<int>(arrows.size());
          arrows.push_back(Arrow{"(" + a->arrows[u].name + "," + b->arrows[v].name + ")", X, Y});
        }
    }

  ProductCat pc;
  pc.left = a;
  pc.right = b;
  auto shell = std::make_shared<FinCat>();
  shell->name = "(" + a->name + "x" + b->name + ")";
  shell->objects = objects;
  shell->arrows = arrows;
  shell->identity = identity;
  shell->hom_.assign(static_cast<std::size_t>(nobj) * nobj, {});
  for (int w = 0; w < shell->num_arrows(); ++w)
    shell->hom_[static_cast<std::size_t>(shell->arrows[w].src) * nobj + shell->arrows[w].tgt]
        .push_back(w);
  pc.cat = shell;

  std::vector<std::tuple<int, int, int>> comp;
  for (int f = 0; f < shell->num_arrows(); ++f) {
    auto [f1, f2] = pc.arrow_parts(f);
    for (int g = 0; g < shell->num_arrows(); ++g) {
      if (shell->arrows[f].tgt != shell->arrows[g].src) continue;
      auto [g1, g2] = pc.arrow_parts(g);
      int h1 = a->then(f1, g1), h2 = b->then(f2, g2);
      comp.emplace_back(f, g, pc.arrow_pair(h1, h2));
    }
  }
  pc.cat = make_fincat(shell->name, std::move(objects), std::move(arrows), std::move(identity), comp);

  pc.proj1.src = pc.cat;
  pc.proj1.tgt = a;
  pc.proj1.omap.resize(nobj);
  pc.proj1.amap.resize(pc.cat->num_arrows());
  pc.proj2.src = pc.cat;
  pc.proj2.tgt = b;
  pc.proj2.omap.resize(nobj);
  pc.proj2.amap.resize(pc.cat->num_arrows());
  for (int X = 0; X < nobj; ++X) {
    auto [x1, x2] = pc.object_parts(X);
    pc.proj1.omap[X] = x1;
    pc.proj2.omap[X] = x2;
  }
  for (int w = 0; w < pc.cat->num_arrows(); ++w) {
    auto [w1, w2] = pc.arrow_parts(w);
    pc.proj1.amap[w] = w1;
    pc.proj2.amap[w] = w2;
  }
  return pc;
}

CatFunctor pair_functor(const ProductCat& prod, const CatFunctor& f, const CatFunctor& g) {
  if (!cat_equal(*f.src, *g.src))
    fail(ErrorCode::MismatchedEndpoints, "pair_functor: sources differ");
  if (!cat_equal(*f.tgt, *prod.left) || !cat_equal(*g.tgt, *prod.right))
    fail(ErrorCode::MismatchedEndpoints, "pair_functor: targets do not match the product");
  CatFunctor h;
  h.src = f.src;
  h.tgt = prod.cat;
  h.omap.resize(f.omap.size());
  h.amap.resize(f.amap.size());
  for (std::size_t i = 0; i < f.omap.size(); ++i)
    h.omap[i] = prod.object_pair(f.omap[i], g.omap[i]);
  for (std::size_t i = 0; i < f.amap.size(); ++i)
    h.amap[i] = prod.arrow_pair(f.amap[i], g.amap[i]);
  return h;
}

// -----------------------------------------------------------------------------
// Natural isomorphisms
// -----------------------------------------------------------------------------

CatVerdict check_nat_iso(const NatIso& iso) {
  const FinCat& c = *iso.source.src;
  const FinCat& d = *iso.source.tgt;
  if (!cat_equal(*iso.source.src, *iso.target.src) || !cat_equal(*iso.source.tgt, *iso.target.tgt))
    return {false, "functors are not parallel"};
  for (int x = 0; x < c.num_objects(); ++x) {
    int cx = iso.component[x];
    const Arrow& a = d.arrows[cx];
    if (a.src != iso.source.omap[x] || a.tgt != iso.target.omap[x])
      return {false, "component at '" + c.objects[x] + "' has wrong endpoints"};
    if (!d.is_invertible(cx)) return {false, "component at '" + c.objects[x] + "' is not invertible"};
  }
  for (int u = 0; u < c.num_arrows(); ++u) {
    const Arrow& au = c.arrows[u];
    if (d.then(iso.source.amap[u], iso.component[au.tgt]) !=
        d.then(iso.component[au.src], iso.target.amap[u]))
      return {false, "naturality square fails at arrow '" + au.name + "'"};
  }
  return {true, ""};
}

NatIsoResult find_natural_iso(const CatFunctor& f, const CatFunctor& g, std::int64_t budget) {
  NatIsoResult res;
  if (!cat_equal(*f.src, *g.src) || !cat_equal(*f.tgt, *g.tgt))
    fail(ErrorCode::MismatchedEndpoints, "find_natural_iso: functors are not parallel");
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  const int n = c.num_objects();

  // candidate components: invertible arrows Fx -> Gx
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x) {
    for (int a : d.hom(f.omap[x], g.omap[x]))
      if (d.is_invertible(a)) candidates[x].push_back(a);
    if (candidates[x].empty()) {
      res.status = SearchStatus::NotIsomorphic;
      res.obstruction = "no invertible arrow " + d.objects[f.omap[x]] + " -> " +
                        d.objects[g.omap[x]] + " at object '" + c.objects[x] + "'";
      return res;
    }
  }

  std::vector<int> chosen(n, -1);
  std::int64_t steps = 0;
  bool exhausted = false;

  std::function<bool(int)> dfs = [&](int x) -> bool {
    if (x == n) return true;
    for (int cand : candidates[x]) {
      if (++steps > budget) {
        exhausted = true;
        return false;
      }
      chosen[x] = cand;
      bool ok = true;
      for (int u = 0; u < c.num_arrows() && ok; ++u) {
        const Arrow& au = c.arrows[u];
        if (chosen[au.src] < 0 || chosen[au.tgt] < 0) continue;
        if (d.then(f.amap[u], chosen[au.tgt]) != d.then(chosen[au.src], g.amap[u])) ok = false;
      }
      if (ok && dfs(x + 1)) return true;
      chosen[x] = -1;
      if (exhausted) return false;
    }
    return false;
  };

  if (dfs(0)) {
    res.status = SearchStatus::Found;
    res.iso.source = f;
    res.iso.target = g;
    res.iso.component = chosen;
    res.steps = steps;
    return res;
  }
  if (exhausted) {
    res.status = SearchStatus::BudgetExceeded;
    res.obstruction = "budget exhausted after " + std::to_string(steps) + " extensions";
    res.steps = steps;
    return res;
  }
  res.status = SearchStatus::NotIsomorphic;
  res.obstruction = "component search exhausted without a natural family";
  res.steps = steps;
  return res;
}

}  // namespace dfop::fincat
