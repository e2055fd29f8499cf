#include "dfop/finset.hpp"

#include <algorithm>
#include <set>

namespace dfop::finset {

int FinSet::index_of(const std::string& e) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == e) return static_cast<int>(i);
  return -1;
}

FinSet make_finset(std::string name, std::vector<std::string> elements) {
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second)
      fail(ErrorCode::ValidationError, "duplicate element '" + e + "' in set '" + name + "'");
  return FinSet{std::move(name), std::move(elements)};
}

FinSet canonical_set(int n) {
  std::vector<std::string> elems;
  elems.reserve(n);
  for (int i = 1; i <= n; ++i) elems.push_back(std::to_string(i));
  return FinSet{std::to_string(n), std::move(elems)};
}

const std::string& FinMap::apply_name(const std::string& e) const {
  int i = source.index_of(e);
  if (i < 0) fail(ErrorCode::ValidationError, "element '" + e + "' not in " + source.name);
  return target.elements[assign[i]];
}

FinMap make_finmap(FinSet source, FinSet target, std::vector<int> assign) {
  if (static_cast<int>(assign.size()) != source.size())
    fail(ErrorCode::ValidationError, "assignment size mismatch for map out of '" + source.name + "'");
  for (int v : assign)
    if (v < 0 || v >= target.size())
      fail(ErrorCode::ValidationError, "assignment value out of range into '" + target.name + "'");
  return FinMap{std::move(source), std::move(target), std::move(assign)};
}

FinMap make_finmap_by_name(FinSet source, FinSet target,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> assign(source.size(), -1);
  for (const auto& [from, to] : pairs) {
    int i = source.index_of(from);
    int j = target.index_of(to);
    if (i < 0) fail(ErrorCode::ValidationError, "unknown source element '" + from + "'");
    if (j < 0) fail(ErrorCode::ValidationError, "unknown target element '" + to + "'");
    assign[i] = j;
  }
  for (std::size_t i = 0; i < assign.size(); ++i)
    if (assign[i] < 0)
      fail(ErrorCode::ValidationError,
           "source element '" + source.elements[i] + "' has no assignment");
  return FinMap{std::move(source), std::move(target), std::move(assign)};
}

FinMap identity_map(const FinSet& I) {
  std::vector<int> assign(I.size());
  for (int i = 0; i < I.size(); ++i) assign[i] = i;
  return FinMap{I, I, std::move(assign)};
}

std::string render(const FinSet& I) {
  return I.name + "{" + join(I.elements, ",") + "}";
}

std::string render(const FinMap& f) {
  std::vector<std::string> parts;
  parts.reserve(f.source.size());
  for (int i = 0; i < f.source.size(); ++i)
    parts.push_back(f.source.elements[i] + ":" + f.target.elements[f.assign[i]]);
  return f.source.name + "->" + f.target.name + "{" + join(parts, ",") + "}";
}

std::string key(const FinSet& I) { return render(I); }

std::string key(const FinMap& f) { return render(f); }

FinMap compose(const FinMap& f, const FinMap& g) {
  if (!(f.target == g.source))
    fail(ErrorCode::MismatchedEndpoints,
         "compose: target of " + render(f) + " is not source of " + render(g));
  std::vector<int> assign(f.source.size());
  for (int i = 0; i < f.source.size(); ++i) assign[i] = g.assign[f.assign[i]];
  return FinMap{f.source, g.target, std::move(assign)};
}

bool is_injective(const FinMap& f) {
  std::vector<char> hit(f.target.size(), 0);
  for (int v : f.assign) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<char> hit(f.target.size(), 0);
  for (int v : f.assign) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

bool is_bijection(const FinMap& f) { return is_injective(f) && is_surjective(f); }

FinMap inverse(const FinMap& f) {
  if (!is_bijection(f)) fail(ErrorCode::ValidationError, "inverse of non-bijection " + render(f));
  std::vector<int> assign(f.target.size());
  for (int i = 0; i < f.source.size(); ++i) assign[f.assign[i]] = i;
  return FinMap{f.target, f.source, std::move(assign)};
}

SpanWitness pullback(const FinMap& f, const FinMap& g) {
  if (!(f.target == g.target))
    fail(ErrorCode::MismatchedEndpoints,
         "pullback: cospan targets differ, " + render(f) + " vs " + render(g));
  std::vector<std::string> elems;
  std::vector<int> to_left, to_right;
  for (int i = 0; i < f.source.size(); ++i)
    for (int l = 0; l < g.source.size(); ++l)
      if (f.assign[i] == g.assign[l]) {
        elems.push_back(tuple_name({f.source.elements[i], g.source.elements[l]}));
        to_left.push_back(i);
        to_right.push_back(l);
      }
  FinSet apex{"(" + f.source.name + "x" + g.source.name + ")", std::move(elems)};
  FinMap left{apex, f.source, std::move(to_left)};
  FinMap right{apex, g.source, std::move(to_right)};
  return SpanWitness{std::move(apex), std::move(left), std::move(right)};
}

SumWitness disjoint_sum(const FinSet& I, const FinSet& J) {
  std::vector<std::string> elems;
  elems.reserve(I.size() + J.size());
  std::vector<int> inl(I.size()), inr(J.size());
  for (int i = 0; i < I.size(); ++i) {
    inl[i] = static_cast<int>(elems.size());
    elems.push_back("l:" + I.elements[i]);
  }
  for (int j = 0; j < J.size(); ++j) {
    inr[j] = static_cast<int>(elems.size());
    elems.push_back("r:" + J.elements[j]);
  }
  FinSet carrier{"(" + I.name + "+" + J.name + ")", std::move(elems)};
  FinMap left{I, carrier, std::move(inl)};
  FinMap right{J, carrier, std::move(inr)};
  return SumWitness{std::move(carrier), std::move(left), std::move(right)};
}

FinMap sum_map(const FinMap& f, const FinMap& g, const SumWitness& src, const SumWitness& tgt) {
  if (!(src.inj_left.source == f.source) || !(src.inj_right.source == g.source) ||
      !(tgt.inj_left.source == f.target) || !(tgt.inj_right.source == g.target))
    fail(ErrorCode::MismatchedEndpoints, "sum_map: witnesses do not match the maps");
  std::vector<int> assign(src.carrier.size(), -1);
  for (int i = 0; i < f.source.size(); ++i)
    assign[src.inj_left.assign[i]] = tgt.inj_left.assign[f.assign[i]];
  for (int j = 0; j < g.source.size(); ++j)
    assign[src.inj_right.assign[j]] = tgt.inj_right.assign[g.assign[j]];
  return FinMap{src.carrier, tgt.carrier, std::move(assign)};
}

std::vector<int> fiber_indices(const FinMap& f, int j) {
  std::vector<int> out;
  for (int i = 0; i < f.source.size(); ++i)
    if (f.assign[i] == j) out.push_back(i);
  return out;
}

std::vector<Fiber> fiber_decompose(const FinMap& f) {
  std::vector<Fiber> fibers;
  for (int j = 0; j < f.target.size(); ++j) {
    std::vector<std::string> elems;
    for (int i : fiber_indices(f, j)) elems.push_back(f.source.elements[i]);
    FinSet dom{f.source.name + "@" + f.target.elements[j], std::move(elems)};
    FinSet cod{f.target.name + "." + f.target.elements[j], {f.target.elements[j]}};
    std::vector<int> assign(dom.size(), 0);
    fibers.push_back(Fiber{f.target.elements[j], FinMap{std::move(dom), std::move(cod), std::move(assign)}});
  }
  return fibers;
}

bool is_sum_diagram(const FinMap& u, const FinMap& v) {
  if (!(u.target == v.target)) return false;
  // jointly bijective: every carrier element hit exactly once across both legs
  std::vector<int> hits(u.target.size(), 0);
  for (int x : u.assign) ++hits[x];
  for (int x : v.assign) ++hits[x];
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

bool is_pullback_square(const FinMap& t, const FinMap& a, const FinMap& b, const FinMap& m) {
  if (!(t.source == a.source) || !(t.target == b.source) || !(a.target == m.source) ||
      !(b.target == m.target))
    fail(ErrorCode::MismatchedEndpoints, "is_pullback_square: boundary mismatch");
  for (int i = 0; i < t.source.size(); ++i)
    if (m.assign[a.assign[i]] != b.assign[t.assign[i]])
      fail(ErrorCode::NonCommuting, "square does not commute at '" + t.source.elements[i] + "'");
  // canonical comparison into the constructed pullback must be a bijection
  SpanWitness pb = pullback(m, b);
  std::vector<char> hit(pb.apex.size(), 0);
  for (int i = 0; i < t.source.size(); ++i) {
    int found = -1;
    for (int p = 0; p < pb.apex.size(); ++p)
      if (pb.left.assign[p] == a.assign[i] && pb.right.assign[p] == t.assign[i]) {
        found = p;
        break;
      }
    if (found < 0 || hit[found]) return false;
    hit[found] = 1;
  }
  for (char h : hit)
    if (!h) return false;
  return true;
}

ExtensivityVerdict check_extensive(const SumWitness& bottom, const FinMap& top_left,
                                   const FinMap& top_right, const FinMap& vert_left,
                                   const FinMap& vert_mid, const FinMap& vert_right) {
  if (!(top_left.target == vert_mid.source) || !(top_right.target == vert_mid.source) ||
      !(vert_left.target == bottom.inj_left.source) ||
      !(vert_right.target == bottom.inj_right.source) || !(vert_mid.target == bottom.carrier))
    fail(ErrorCode::MismatchedEndpoints, "check_extensive: diagram boundary mismatch");
  // commuting squares (throws NonCommuting otherwise) and pullback property
  ExtensivityVerdict v;
  v.left_square_pb = is_pullback_square(top_left, vert_left, vert_mid, bottom.inj_left);
  v.right_square_pb = is_pullback_square(top_right, vert_right, vert_mid, bottom.inj_right);
  v.top_is_sum = is_sum_diagram(top_left, top_right);
  bool both_pb = v.left_square_pb && v.right_square_pb;
  v.holds = (v.top_is_sum == both_pb);
  if (!v.holds) {
    v.witness = v.top_is_sum ? "top row is a sum but a square is not a pullback (left_pb=" +
                                   std::string(v.left_square_pb ? "yes" : "no") +
                                   ", right_pb=" + (v.right_square_pb ? "yes" : "no") + ")"
                             : "both squares are pullbacks but the top row is not a sum";
  }
  return v;
}

std::vector<FinMap> all_maps(const FinSet& I, const FinSet& J) {
  std::vector<FinMap> maps;
  if (I.size() == 0) {
    maps.push_back(FinMap{I, J, {}});
    return maps;
  }
  if (J.size() == 0) return maps;  // no maps from nonempty into empty
  std::vector<int> assign(I.size(), 0);
  while (true) {
    maps.push_back(FinMap{I, J, assign});
    int k = I.size() - 1;
    while (k >= 0) {
      if (++assign[k] < J.size()) break;
      assign[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return maps;
}

}  // namespace dfop::finset
