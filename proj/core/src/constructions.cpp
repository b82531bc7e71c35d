#include "pretop/constructions.hpp"

#include <functional>

#include "pretop/errors.hpp"

namespace pretop {

ThetaQuotientReport theta_quotient(const FinitePretop& x, std::vector<std::string> target_names,
                                   std::vector<int> table) {
  const int m = static_cast<int>(target_names.size());
  if (static_cast<int>(table.size()) != x.size()) fail(ErrorKind::UnknownPoint, "map table is not total");
  Subset hit;
  for (int v : table) {
    if (v < 0 || v >= m) fail(ErrorKind::UnknownPoint, "map leaves the target");
    hit = hit | Subset::single(v);
  }
  if (hit != Subset::full(m)) {
    fail(ErrorKind::NotSurjective, target_names.at((Subset::full(m) - hit).first()) + " has an empty fiber");
  }
  // The target set with a placeholder structure, for preimages and f#.
  const FiniteMap raw = FiniteMap::make(x, FinitePretop::validate(target_names, [&] {
                                          std::vector<Subset> v;
                                          for (int i = 0; i < m; ++i) v.push_back(Subset::single(i));
                                          return v;
                                        }()),
                                        table);
  std::vector<Subset> vic;
  std::vector<Subset> fiber_vic;
  for (int y = 0; y < m; ++y) {
    Subset u;
    for (int a : raw.fiber(y).elements()) u = u | x.min_vicinity(a);
    fiber_vic.push_back(u);
    vic.push_back(f_sharp(raw, u));
  }
  ThetaQuotientReport r;
  r.space = FinitePretop::validate(std::move(target_names), vic);
  r.map = FiniteMap::make(x, r.space, std::move(table));
  for (int y = 0; y < m; ++y) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
      const Subset k(bits);
      const Subset pre = r.map.preimage(k);
      const bool sigma = compact_at(x, PrincipalFilter{pre}, r.map.fiber(y), CompactMethod::filter).compact;
      const bool lemma = fiber_vic[y].includes(pre);
      const bool kernel = r.space.min_vicinity(y).includes(k);
      if (sigma != lemma || lemma != kernel) r.lemma_holds = false;
    }
  }
  r.source_compact = compact_at(x, PrincipalFilter{x.points()}, x.points(), CompactMethod::filter).compact;
  r.source_hausdorff = is_hausdorff(x).hausdorff;
  r.strongly_irreducible = is_strongly_irreducible(r.map).strongly_irreducible;
  if (r.strongly_irreducible) r.w_theta_continuous = is_w_theta_continuous(r.map);
  return r;
}

std::vector<std::string> Extension::base_names() const {
  std::vector<std::string> out;
  for (int p : base.elements()) out.push_back(space.name(p));
  return out;
}

Extension make_extension(const FinitePretop& y, Subset x) {
  x = x & y.points();
  if (x.empty()) fail(ErrorKind::EmptySubspace, "extension of the empty set");
  const Subset missing = y.points() - y.adh(x);
  if (!missing.empty()) fail(ErrorKind::NotDense, y.name(missing.first()) + " is not in adh X");
  return {y, x};
}

FinitePretop strict_extension(const Extension& e) {
  std::vector<Subset> vic;
  for (int p = 0; p < e.space.size(); ++p) vic.push_back(Subset::single(p) | e.trace(p));
  return FinitePretop::validate(e.space.names(), std::move(vic));
}

Subset o_set(const Extension& e, Subset a) {
  Subset out;
  for (int p = 0; p < e.space.size(); ++p) {
    if (a.includes(e.trace(p))) out = out | Subset::single(p);
  }
  return out;
}

FinitePretop simple_extension(const Extension& e) {
  std::vector<Subset> vic;
  for (int p = 0; p < e.space.size(); ++p) vic.push_back(o_set(e, e.trace(p)));
  return FinitePretop::validate(e.space.names(), std::move(vic));
}

ProjectiveReport projectively_leq(const Extension& z, const Extension& y) {
  if (z.base_names() != y.base_names()) fail(ErrorKind::DifferentBase, "extensions of different spaces");
  const int n = y.space.size(), m = z.space.size();
  std::vector<int> table(n, 0);
  std::vector<int> free;
  for (int p = 0; p < n; ++p) {
    if (y.base.contains(p)) {
      table[p] = *z.space.index_of(y.space.name(p));
    } else {
      free.push_back(p);
    }
  }
  ProjectiveReport r;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      const FiniteMap f = FiniteMap::make(y.space, z.space, table);
      if (!is_continuous(f, ContinuityMethod::vicinity).continuous) return false;
      r.leq = true;
      r.witness = table;
      return true;
    }
    for (int v = 0; v < m; ++v) {
      table[free[i]] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(0);
  return r;
}

StarKappaReport star_and_kappa_finite(const FinitePretop& x) {
  StarKappaReport r;
  r.star = x;
  r.kappa = strict_extension(make_extension(x, x.points()));
  r.regular = is_regular(x).regular;
  r.note = "finite spaces carry no free ultrafilters: X* = X and kX = X; use end_extension for the infinite fragment";
  return r;
}

}  // namespace pretop
