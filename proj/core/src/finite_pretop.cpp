#include "pretop/finite_pretop.hpp"

#include <algorithm>

#include "pretop/errors.hpp"

namespace pretop {

FinitePretop FinitePretop::validate(std::vector<std::string> names, std::vector<Subset> vicinity) {
  if (names.size() != vicinity.size()) {
    fail(ErrorKind::AxiomViolation, "vicinity table does not cover every point");
  }
  if (names.size() > 64) fail(ErrorKind::SizeLimit, "finite spaces hold at most 64 points");
  const int n = static_cast<int>(names.size());
  for (int x = 0; x < n; ++x) {
    if (!vicinity[x].contains(x)) fail(ErrorKind::AxiomViolation, names[x]);
    if (!Subset::full(n).includes(vicinity[x])) {
      fail(ErrorKind::AxiomViolation, "vicinity of " + names[x] + " leaves the point set");
    }
  }
  FinitePretop out;
  out.names_ = std::move(names);
  out.vicinity_ = std::move(vicinity);
  return out;
}

FinitePretop FinitePretop::numbered(std::vector<Subset> vicinity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vicinity.size(); ++i) names.push_back(std::to_string(i + 1));
  return validate(std::move(names), std::move(vicinity));
}

FinitePretop FinitePretop::discrete(int n) {
  std::vector<Subset> v;
  for (int i = 0; i < n; ++i) v.push_back(Subset::single(i));
  return numbered(std::move(v));
}

std::optional<int> FinitePretop::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

Subset FinitePretop::adh(Subset a) const noexcept {
  Subset out;
  for (int x = 0; x < size(); ++x) {
    if (vicinity_[x].meets(a)) out = out | Subset::single(x);
  }
  return out;
}

Subset FinitePretop::inh(Subset a) const noexcept {
  Subset out;
  for (int x = 0; x < size(); ++x) {
    if (a.includes(vicinity_[x])) out = out | Subset::single(x);
  }
  return out;
}

Subset adh_set(const FinitePretop& x, Subset a) { return x.adh(a); }
Subset inh_set(const FinitePretop& x, Subset a) { return x.inh(a); }

Subset adh_filter(const FinitePretop& x, PrincipalFilter f) {
  if (f.kernel.empty()) fail(ErrorKind::EmptyKernel, "filter kernel is empty");
  return x.adh(f.kernel);
}

bool converges(const FinitePretop& x, PrincipalFilter f, int point) {
  return x.min_vicinity(point).includes(f.kernel);
}

HausdorffReport is_hausdorff(const FinitePretop& x) {
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) {
      if (x.min_vicinity(a).meets(x.min_vicinity(b))) return {false, std::pair{a, b}};
    }
  }
  return {};
}

TopologicalReport is_topological(const FinitePretop& x) {
  const std::uint64_t limit = std::uint64_t{1} << x.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset once = x.adh(Subset(bits));
    if (x.adh(once) != once) return {false, Subset(bits)};
  }
  return {};
}

RegularReport is_regular(const FinitePretop& x) {
  for (int p = 0; p < x.size(); ++p) {
    if (x.adh(x.min_vicinity(p)) != x.min_vicinity(p)) return {false, p};
  }
  return {};
}

CoverReport is_cover(const FinitePretop& x, const std::vector<Subset>& family, std::optional<Subset> of) {
  Subset target = of.value_or(x.points());
  for (int p : target.elements()) {
    bool hit = std::any_of(family.begin(), family.end(),
                           [&](Subset c) { return c.includes(x.min_vicinity(p)); });
    if (!hit) return {false, p};
  }
  return {};
}

namespace {

// Visits every family (C_p)_{p∈A} with C_p ⊇ M(p); stops when fn returns false.
template <typename Fn>
bool for_each_choice_cover(const FinitePretop& x, Subset a, Fn&& fn) {
  const std::vector<int> pts = a.elements();
  std::vector<Subset> chosen(pts.size());
  bool keep_going = true;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (!keep_going) return;
    if (i == pts.size()) {
      keep_going = fn(chosen);
      return;
    }
    for_each_superset(x.min_vicinity(pts[i]), x.size(), [&](Subset c) {
      chosen[i] = c;
      rec(i + 1);
      return keep_going;
    });
  };
  rec(0);
  return keep_going;
}

Subset union_of(const std::vector<Subset>& family) {
  Subset u;
  for (Subset c : family) u = u | c;
  return u;
}

}  // namespace

CompactAtReport compact_at(const FinitePretop& x, PrincipalFilter f, Subset a, CompactMethod method) {
  if (f.kernel.empty()) fail(ErrorKind::EmptyKernel, "filter kernel is empty");
  CompactAtReport report;
  if (method == CompactMethod::filter) {
    const std::uint64_t limit = std::uint64_t{1} << x.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      Subset k(bits);
      if (!k.meets(f.kernel)) continue;  // ↑K meshes ↑ker iff K ∩ ker ≠ ∅
      if (!x.adh(k).meets(a)) {
        report.compact = false;
        report.failing_kernel = k;
        return report;
      }
    }
    return report;
  }
  // Covers of A: supersets of the one-vicinity-per-point covers only help,
  // and the finite subfamily with the largest union is the whole family.
  for_each_choice_cover(x, a, [&](const std::vector<Subset>& cover) {
    if (union_of(cover).includes(f.kernel)) return true;
    report.compact = false;
    report.failing_cover = cover;
    return false;
  });
  return report;
}

bool is_cover_compact(const FinitePretop& x, Subset a, CoverCompactMethod method) {
  const int n = x.size();
  const std::uint64_t limit = std::uint64_t{1} << n;
  switch (method) {
    case CoverCompactMethod::cover:
      return for_each_choice_cover(x, a, [&](const std::vector<Subset>& cover) {
        return x.inh(union_of(cover)).includes(a);
      });
    case CoverCompactMethod::filter_refines:
      for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset k(bits);
        if (x.adh(k).meets(a)) continue;
        bool found = false;
        for_each_superset(k, n, [&](Subset member) {
          found = !x.adh(member).meets(a);
          return !found;
        });
        if (!found) return false;
      }
      return true;
    case CoverCompactMethod::vicinity_separation:
      for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset k(bits);
        if (x.adh(k).meets(a)) continue;
        bool found = false;
        for (std::uint64_t v = 0; v < limit && !found; ++v) {
          Subset vic(v);
          if (!x.inh(vic).includes(a)) continue;
          for_each_superset(k, n, [&](Subset member) {
            found = !vic.meets(member);
            return !found;
          });
        }
        if (!found) return false;
      }
      return true;
  }
  return false;
}

FinitePretop restrict(const FinitePretop& x, Subset a) {
  a = a & x.points();
  if (a.empty()) fail(ErrorKind::EmptySubspace, "restriction to the empty set");
  const std::vector<int> keep = a.elements();
  std::vector<std::string> names;
  std::vector<Subset> vic;
  for (int p : keep) {
    names.push_back(x.name(p));
    Subset trace = x.min_vicinity(p) & a;
    Subset renumbered;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (trace.contains(keep[j])) renumbered = renumbered | Subset::single(static_cast<int>(j));
    }
    vic.push_back(renumbered);
  }
  return FinitePretop::validate(std::move(names), std::move(vic));
}

bool coarser_leq(const FinitePretop& x1, const FinitePretop& x2) {
  if (x1.names() != x2.names()) fail(ErrorKind::PointSetMismatch, "spaces on different point sets");
  for (int p = 0; p < x1.size(); ++p) {
    if (!x1.min_vicinity(p).includes(x2.min_vicinity(p))) return false;
  }
  return true;
}

std::uint64_t pretop_count(int n) {
  if (n < 1 || n > kMaxEnumeratedPoints) {
    fail(ErrorKind::SizeLimit, "enumeration supports 1..5 points, got " + std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n - 1));
}

FinitePretop pretop_at(int n, std::uint64_t index) {
  if (index >= pretop_count(n)) fail(ErrorKind::SizeLimit, "pretopology index out of range");
  std::vector<Subset> vic;
  int bit = 0;
  for (int p = 0; p < n; ++p) {
    Subset m = Subset::single(p);
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      if ((index >> bit) & 1U) m = m | Subset::single(q);
      ++bit;
    }
    vic.push_back(m);
  }
  return FinitePretop::numbered(std::move(vic));
}

void for_each_pretop(int n, const std::function<void(const FinitePretop&)>& fn) {
  const std::uint64_t count = pretop_count(n);
  for (std::uint64_t i = 0; i < count; ++i) fn(pretop_at(n, i));
}

FiniteTopology FiniteTopology::make(std::vector<std::string> names, std::vector<Subset> opens) {
  const int n = static_cast<int>(names.size());
  if (n > 64) fail(ErrorKind::SizeLimit, "finite spaces hold at most 64 points");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(Subset()) || !has(Subset::full(n))) {
    fail(ErrorKind::InvalidTopology, "open sets must include the empty set and the whole space");
  }
  for (Subset u : opens) {
    if (!Subset::full(n).includes(u)) fail(ErrorKind::InvalidTopology, "open set leaves the point set");
    for (Subset v : opens) {
      if (!has(u | v)) fail(ErrorKind::InvalidTopology, "not closed under union");
      if (!has(u & v)) fail(ErrorKind::InvalidTopology, "not closed under intersection");
    }
  }
  FiniteTopology t;
  t.names_ = std::move(names);
  t.opens_ = std::move(opens);
  return t;
}

FiniteTopology FiniteTopology::from_pretop(const FinitePretop& x) {
  if (!is_topological(x).topological) fail(ErrorKind::InvalidTopology, "pretopology is not topological");
  std::vector<Subset> opens;
  const std::uint64_t limit = std::uint64_t{1} << x.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (x.inh(Subset(bits)) == Subset(bits)) opens.push_back(Subset(bits));
  }
  return make(x.names(), std::move(opens));
}

bool FiniteTopology::is_open(Subset s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

Subset FiniteTopology::min_open(int x) const {
  Subset m = Subset::full(size());
  for (Subset u : opens_) {
    if (u.contains(x)) m = m & u;
  }
  return m;
}

Subset FiniteTopology::closure(Subset a) const {
  Subset out;
  for (int x = 0; x < size(); ++x) {
    if (min_open(x).meets(a)) out = out | Subset::single(x);
  }
  return out;
}

FinitePretop FiniteTopology::neighbourhood_pretop() const {
  std::vector<Subset> vic;
  for (int x = 0; x < size(); ++x) vic.push_back(min_open(x));
  return FinitePretop::validate(names_, std::move(vic));
}

std::vector<FiniteTopology> enumerate_topologies(int n) {
  if (n < 1 || n > 3) fail(ErrorKind::SizeLimit, "topology enumeration supports 1..3 points");
  std::vector<FiniteTopology> out;
  for_each_pretop(n, [&](const FinitePretop& x) {
    if (is_topological(x).topological) out.push_back(FiniteTopology::from_pretop(x));
  });
  return out;
}

}  // namespace pretop
