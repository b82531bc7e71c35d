#include "pretop/map_analysis.hpp"

#include "pretop/errors.hpp"
#include "pretop/regularization.hpp"

namespace pretop {

FiniteMap FiniteMap::make(FinitePretop source, FinitePretop target, std::vector<int> table) {
  if (static_cast<int>(table.size()) != source.size()) fail(ErrorKind::UnknownPoint, "map table is not total");
  for (int y : table) {
    if (y < 0 || y >= target.size()) fail(ErrorKind::UnknownPoint, "map value outside the target");
  }
  FiniteMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.table_ = std::move(table);
  return f;
}

FiniteMap FiniteMap::identity(const FinitePretop& source, const FinitePretop& target) {
  if (source.names() != target.names()) fail(ErrorKind::PointSetMismatch, "identity between different point sets");
  std::vector<int> table(source.size());
  for (int i = 0; i < source.size(); ++i) table[i] = i;
  return make(source, target, std::move(table));
}

Subset FiniteMap::image(Subset a) const {
  Subset out;
  for (int x : a.elements()) out = out | Subset::single(table_[x]);
  return out;
}

Subset FiniteMap::preimage(Subset b) const {
  Subset out;
  for (int x = 0; x < source_.size(); ++x) {
    if (b.contains(table_[x])) out = out | Subset::single(x);
  }
  return out;
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::PointSetMismatch, "maps do not compose");
  std::vector<int> table;
  for (int x : f.table()) table.push_back(g(x));
  return FiniteMap::make(f.source(), g.target(), std::move(table));
}

PrincipalFilter image_filter(const FiniteMap& f, PrincipalFilter filter) { return {f.image(filter.kernel)}; }

PrincipalFilter preimage_filter(const FiniteMap& f, PrincipalFilter filter) {
  Subset k = f.preimage(filter.kernel);
  if (k.empty()) fail(ErrorKind::EmptyPreimage, "filter does not mesh the range");
  return {k};
}

namespace {

template <typename Fn>
std::optional<Subset> first_failing_subset(int n, bool nonempty, Fn&& good) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = nonempty ? 1 : 0; bits < limit; ++bits) {
    if (!good(Subset(bits))) return Subset(bits);
  }
  return std::nullopt;
}

}  // namespace

ContinuityReport is_continuous(const FiniteMap& f, ContinuityMethod method) {
  const FinitePretop& x = f.source();
  const FinitePretop& y = f.target();
  ContinuityReport r;
  auto fail_with = [&](std::optional<int> p, std::optional<Subset> s) {
    r.continuous = false;
    r.point = p;
    r.set = s;
    return r;
  };
  switch (method) {
    case ContinuityMethod::limit:
      // Every ↑K with K ⊆ M(p) converges to p; its image must converge to f(p).
      for (int p = 0; p < x.size(); ++p) {
        auto bad = first_failing_subset(x.size(), true, [&](Subset k) {
          return !x.min_vicinity(p).includes(k) || y.min_vicinity(f(p)).includes(f.image(k));
        });
        if (bad) return fail_with(p, bad);
      }
      return r;
    case ContinuityMethod::adh_filter:
      if (auto bad = first_failing_subset(x.size(), true, [&](Subset k) {
            return y.adh(f.image(k)).includes(f.image(x.adh(k)));
          })) {
        return fail_with(std::nullopt, bad);
      }
      return r;
    case ContinuityMethod::adh_set:
      if (auto bad = first_failing_subset(x.size(), false, [&](Subset a) {
            return y.adh(f.image(a)).includes(f.image(x.adh(a)));
          })) {
        return fail_with(std::nullopt, bad);
      }
      return r;
    case ContinuityMethod::inh:
      if (auto bad = first_failing_subset(y.size(), false, [&](Subset b) {
            return x.inh(f.preimage(b)).includes(f.preimage(y.inh(b)));
          })) {
        return fail_with(std::nullopt, bad);
      }
      return r;
    case ContinuityMethod::vicinity:
      for (int p = 0; p < x.size(); ++p) {
        std::optional<Subset> bad;
        for_each_superset(y.min_vicinity(f(p)), y.size(), [&](Subset v) {
          bool found = false;
          for_each_superset(x.min_vicinity(p), x.size(), [&](Subset u) {
            found = v.includes(f.image(u));
            return !found;
          });
          if (!found) bad = v;
          return found;
        });
        if (bad) return fail_with(p, bad);
      }
      return r;
  }
  return r;
}

bool is_theta_continuous(const FiniteTopology& x, const FiniteTopology& y, const std::vector<int>& table) {
  auto f = FiniteMap::make(theta_of_topology(x).theta, theta_of_topology(y).theta, table);
  return is_continuous(f, ContinuityMethod::adh_set).continuous;
}

bool is_w_theta_continuous(const FiniteMap& f) {
  auto g = FiniteMap::make(f.source(), partial_regularization(f.target()), f.table());
  return is_continuous(g, ContinuityMethod::adh_set).continuous;
}

namespace {

// ↑kernel compact at A, including the degenerate cases A = ∅.
bool compact_at_or_empty(const FinitePretop& x, Subset kernel, Subset a) {
  if (a.empty()) return false;
  return compact_at(x, {kernel}, a, CompactMethod::filter).compact;
}

}  // namespace

PerfectReport is_perfect(const FiniteMap& f, PerfectMethod method) {
  const FinitePretop& x = f.source();
  const FinitePretop& y = f.target();
  PerfectReport r;
  switch (method) {
    case PerfectMethod::definition: {
      const std::uint64_t limit = std::uint64_t{1} << y.size();
      for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset k(bits);
        Subset pre = f.preimage(k);
        if (pre.empty()) continue;  // the preimage filter is degenerate; nothing meshes it
        for (int q = 0; q < y.size(); ++q) {
          if (!y.min_vicinity(q).includes(k)) continue;
          if (!compact_at_or_empty(x, pre, f.fiber(q))) {
            r.perfect = false;
            r.kernel = k;
            r.point = q;
            return r;
          }
        }
      }
      return r;
    }
    case PerfectMethod::adh_inequality:
      if (auto bad = first_failing_subset(x.size(), true, [&](Subset k) {
            return f.image(x.adh(k)).includes(y.adh(f.image(k)));
          })) {
        r.perfect = false;
        r.kernel = bad;
      }
      return r;
    case PerfectMethod::a_and_b:
      if (auto bad = first_failing_subset(x.size(), false, [&](Subset a) {
            return f.image(x.adh(a)).includes(y.adh(f.image(a)));
          })) {
        r.condition_a = false;
        r.kernel = bad;
      }
      for (int q = 0; q < y.size() && r.condition_b; ++q) {
        if (!is_cover_compact(x, f.fiber(q), CoverCompactMethod::cover)) {
          r.condition_b = false;
          r.point = q;
        }
      }
      r.perfect = r.condition_a && r.condition_b;
      return r;
  }
  return r;
}

Subset f_sharp(const FiniteMap& f, Subset a) {
  Subset out;
  for (int q = 0; q < f.target().size(); ++q) {
    if (a.includes(f.fiber(q))) out = out | Subset::single(q);
  }
  return out;
}

bool irreducibility_fails_at(const FiniteMap& f, Subset u, Subset v) {
  const FinitePretop& x = f.source();
  if (x.inh(u).empty() || x.inh(v).empty()) return false;
  Subset both = u & v;
  if (both.empty()) return false;
  for (int q = 0; q < f.target().size(); ++q) {
    Subset fib = f.fiber(q);
    if (!fib.empty() && both.includes(fib)) return false;
  }
  return true;
}

IrreducibleReport is_strongly_irreducible(const FiniteMap& f) {
  const std::uint64_t limit = std::uint64_t{1} << f.source().size();
  for (std::uint64_t u = 1; u < limit; ++u) {
    for (std::uint64_t v = u; v < limit; ++v) {
      if (irreducibility_fails_at(f, Subset(u), Subset(v))) return {false, std::pair{Subset(u), Subset(v)}};
    }
  }
  return {};
}

void for_each_table(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> table(n, 0);
  if (m == 0) {
    if (n == 0) fn(table);
    return;
  }
  for (;;) {
    fn(table);
    int i = n - 1;
    while (i >= 0 && table[i] == m - 1) table[i--] = 0;
    if (i < 0) return;
    ++table[i];
  }
}

}  // namespace pretop
