#include "pretop/regularization.hpp"

#include <functional>

#include "pretop/errors.hpp"

namespace pretop {

FinitePretop partial_regularization(const FinitePretop& x) {
  std::vector<Subset> vic;
  for (int p = 0; p < x.size(); ++p) vic.push_back(x.adh(x.min_vicinity(p)));
  return FinitePretop::validate(x.names(), std::move(vic));
}

namespace {

Subset next_level(const FinitePretop& x, Subset kernel) {
  Subset out = kernel;
  for (int p : kernel.elements()) out = out | x.min_vicinity(p);
  return out;
}

}  // namespace

PrincipalFilter FilterTower::level(int n) const {
  return {levels.at(std::min<std::size_t>(n, levels.size() - 1))};
}

FilterTower filter_tower(const FinitePretop& x, PrincipalFilter f) {
  if (f.kernel.empty()) fail(ErrorKind::EmptyKernel, "filter kernel is empty");
  FilterTower t;
  t.base = f;
  t.levels.push_back(f.kernel);
  for (;;) {
    Subset next = next_level(x, t.levels.back());
    if (next == t.levels.back()) break;
    t.levels.push_back(next);
  }
  t.stabilized_at = static_cast<int>(t.levels.size()) - 1;
  t.open = t.levels.size() == 1;
  t.inherent = !x.inh(f.kernel).empty();
  return t;
}

TowerLemmas tower_lemmas_check(const FinitePretop& x, PrincipalFilter f) {
  const FinitePretop r = partial_regularization(x);
  const FilterTower tower = filter_tower(x, f);
  TowerLemmas out;
  out.adh_pi = x.adh(f.kernel);
  out.adh_rpi = r.adh(f.kernel);
  out.adh_pi_f1 = x.adh(tower.level(1).kernel);
  out.open = tower.open;
  out.open_lemma = !out.open || out.adh_pi == out.adh_rpi;
  out.tower_lemma = out.adh_rpi == out.adh_pi_f1;
  for (int n = 0; n <= tower.stabilized_at; ++n) {
    if (r.adh(tower.level(n).kernel) != x.adh(tower.level(n + 1).kernel)) out.shifted = false;
  }
  return out;
}

ThetaPair theta_of_topology(const FiniteTopology& t) {
  FinitePretop nb = t.neighbourhood_pretop();
  return {nb, partial_regularization(nb)};
}

std::optional<std::vector<Subset>> find_adh_subcover(const FinitePretop& x, const std::vector<Subset>& cover) {
  const int m = static_cast<int>(cover.size());
  std::vector<int> pick;
  std::optional<std::vector<Subset>> found;
  std::function<bool(int, int, Subset)> rec = [&](int from, int left, Subset covered) {
    if (left == 0) {
      if (covered != x.points()) return false;
      found.emplace();
      for (int i : pick) found->push_back(cover[i]);
      return true;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      if (rec(i + 1, left - 1, covered | x.adh(cover[i]))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= m; ++size) {
    if (rec(0, size, Subset())) return found;
  }
  return std::nullopt;
}

QuasiPhcReport is_quasi_phc(const FinitePretop& x, QuasiPhcMethod method) {
  QuasiPhcReport report;
  report.hausdorff = is_hausdorff(x).hausdorff;
  const std::uint64_t limit = std::uint64_t{1} << x.size();
  auto scan = [&](auto&& good) {
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (!good(Subset(bits))) {
        report.quasi_phc = false;
        report.failing_kernel = Subset(bits);
        return;
      }
    }
  };
  switch (method) {
    case QuasiPhcMethod::rpi_compact: {
      const FinitePretop r = partial_regularization(x);
      scan([&](Subset k) { return !r.adh(k).empty(); });
      break;
    }
    case QuasiPhcMethod::inherent_filter:
      scan([&](Subset k) { return x.inh(k).empty() || !x.adh(k).empty(); });
      break;
    case QuasiPhcMethod::tower_adh:
      scan([&](Subset k) { return !x.adh(next_level(x, k)).empty(); });
      break;
    case QuasiPhcMethod::adh_cover: {
      // One vicinity superset per point; larger covers only make it easier.
      const int n = x.size();
      std::vector<Subset> chosen(n);
      std::function<bool(int)> rec = [&](int p) {
        if (p == n) {
          if (find_adh_subcover(x, chosen)) return true;
          report.quasi_phc = false;
          report.failing_cover = chosen;
          return false;
        }
        bool ok = true;
        for_each_superset(x.min_vicinity(p), n, [&](Subset c) {
          chosen[p] = c;
          ok = rec(p + 1);
          return ok;
        });
        return ok;
      };
      rec(0);
      break;
    }
  }
  return report;
}

bool hset_check_finite(const FiniteTopology& t, Subset a, HSetMethod method) {
  if (a.empty()) fail(ErrorKind::EmptySubspace, "H-set check needs a nonempty set");
  const int n = t.size();
  // An open filter on a finite space is generated by one nonempty open set G;
  // it meets A iff G does, and its adherence is cl G.
  auto open_ok = [&](Subset g) { return !g.meets(a) || t.closure(g).meets(a); };
  switch (method) {
    case HSetMethod::open_filter:
      for (Subset g : t.opens()) {
        if (!g.empty() && !open_ok(g)) return false;
      }
      return true;
    case HSetMethod::open_ultrafilter:
      for (Subset g : t.opens()) {
        if (g.empty()) continue;
        bool minimal = true;
        for (Subset h : t.opens()) {
          if (!h.empty() && h != g && g.includes(h)) minimal = false;
        }
        if (minimal && !open_ok(g)) return false;
      }
      return true;
    case HSetMethod::theta_adh: {
      const FinitePretop theta = theta_of_topology(t).theta;
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset k(bits);
        if (k.meets(a) && !theta.adh(k).meets(a)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace pretop
