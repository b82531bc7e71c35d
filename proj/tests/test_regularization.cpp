#include "doctest.h"
#include "fixtures.hpp"
#include "pretop/errors.hpp"
#include "pretop/regularization.hpp"

using namespace pretop;
using namespace fixtures;

namespace {

// Oracle: F¹ from its definition, kernel = ⋂{F ⊇ ker : ker ⊆ inh F}.
Subset tower_step_oracle(const FinitePretop& x, Subset kernel) {
  Subset k = x.points();
  for_each_subset(x.size(), [&](Subset f) {
    if (f.includes(kernel) && x.inh(f).includes(kernel)) k = k & f;
  });
  return k;
}

// ↑g is pretopologically open iff every member F has inh F ∈ ↑g.
bool open_oracle(const FinitePretop& x, Subset g) {
  bool ok = true;
  for_each_subset(x.size(), [&](Subset f) {
    if (f.includes(g) && !x.inh(f).includes(g)) ok = false;
  });
  return ok;
}

FiniteTopology topology_on(int n, std::vector<Subset> opens) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return FiniteTopology::make(names, std::move(opens));
}

}  // namespace

TEST_CASE("partial_regularization") {
  auto r = partial_regularization(q3());
  CHECK(r.min_vicinity(0) == Subset::of({0, 1}));
  CHECK(r.min_vicinity(1) == Subset::of({0, 1, 2}));
  CHECK(r.min_vicinity(2) == Subset::of({1, 2}));
  CHECK(partial_regularization(d2()) == d2());
  auto rp = partial_regularization(p3());
  for (int p = 0; p < 3; ++p) CHECK(rp.min_vicinity(p) == rp.points());
  for_each_pretop(3, [](const FinitePretop& x) { CHECK(coarser_leq(partial_regularization(x), x)); });
}

TEST_CASE("filter_tower examples") {
  auto t = filter_tower(q3(), {Subset::of({0})});
  REQUIRE(t.levels.size() == 3);
  CHECK(t.level(1).kernel == Subset::of({0, 1}));
  CHECK(t.level(2).kernel == Subset::of({0, 1, 2}));
  CHECK(t.limit().kernel == q3().points());
  CHECK(t.stabilized_at == 2);
  CHECK_FALSE(t.open);
  CHECK_FALSE(t.inherent);

  auto o = filter_tower(q3(), {Subset::of({1, 2})});
  CHECK(o.levels.size() == 1);
  CHECK(o.open);
  CHECK(o.inherent);

  auto c = filter_tower(p3(), {p3().points()});
  CHECK(c.levels.size() == 1);
  CHECK_THROWS_AS(filter_tower(q3(), {Subset()}), Error);
}

TEST_CASE("filter_tower against the definition, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for_each_pretop(n, [&](const FinitePretop& x) {
      for_each_nonempty(n, [&](Subset k) {
        auto t = filter_tower(x, {k});
        for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
          CHECK(t.levels[i + 1] == tower_step_oracle(x, t.levels[i]));
          CHECK(t.levels[i + 1].includes(t.levels[i]));
        }
        CHECK(t.stabilized_at <= n);
        CHECK(t.open == open_oracle(x, k));
        bool inherent = true;
        for_each_subset(n, [&](Subset f) {
          if (f.includes(k) && x.inh(f).empty()) inherent = false;
        });
        CHECK(t.inherent == inherent);
        // F° is the largest open filter contained in F: least open kernel ⊇ ker F.
        std::optional<Subset> best;
        for_each_subset(n, [&](Subset g) {
          if (!g.includes(k) || !open_oracle(x, g)) return;
          if (!best || best->includes(g)) best = g;
        });
        REQUIRE(best);
        CHECK(*best == t.limit().kernel);
        for_each_subset(n, [&](Subset g) {
          if (g.includes(k) && open_oracle(x, g)) CHECK(g.includes(*best));
        });
      });
    });
  }
}

TEST_CASE("tower lemmas") {
  auto a = tower_lemmas_check(q3(), {Subset::of({0})});
  CHECK(a.adh_rpi == Subset::of({0, 1}));
  CHECK(a.adh_pi_f1 == Subset::of({0, 1}));
  CHECK(a.tower_lemma);
  auto b = tower_lemmas_check(q3(), {Subset::of({1, 2})});
  CHECK(b.open);
  CHECK(b.adh_pi == q3().points());
  CHECK(b.adh_rpi == q3().points());
  CHECK(b.open_lemma);
  int total = 0, agree = 0;
  for (int n = 1; n <= 3; ++n) {
    for_each_pretop(n, [&](const FinitePretop& x) {
      for_each_nonempty(n, [&](Subset k) {
        auto r = tower_lemmas_check(x, {k});
        ++total;
        agree += (r.open_lemma && r.tower_lemma && r.shifted) ? 1 : 0;
      });
    });
  }
  CHECK(agree == total);
}

TEST_CASE("theta_of_topology") {
  auto p = theta_of_topology(FiniteTopology::from_pretop(p3()));
  CHECK(p.neighbourhood == p3());
  CHECK(p.theta.min_vicinity(0) == p3().points());
  auto d = theta_of_topology(topology_on(2, {Subset(), Subset::of({0}), Subset::of({1}), Subset::of({0, 1})}));
  CHECK(d.theta == d.neighbourhood);
  CHECK(d.theta.min_vicinity(0) == Subset::of({0}));
  auto ind = theta_of_topology(topology_on(2, {Subset(), Subset::of({0, 1})}));
  CHECK(ind.theta.min_vicinity(0) == Subset::of({0, 1}));
  CHECK(ind.theta.min_vicinity(1) == Subset::of({0, 1}));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      auto pair = theta_of_topology(t);
      for (int x = 0; x < n; ++x) CHECK(pair.theta.min_vicinity(x) == t.closure(t.min_open(x)));
    }
  }
}

TEST_CASE("quasi-PHC") {
  for (int n = 1; n <= 3; ++n) {
    for_each_pretop(n, [&](const FinitePretop& x) {
      for (auto m : {QuasiPhcMethod::rpi_compact, QuasiPhcMethod::adh_cover, QuasiPhcMethod::inherent_filter,
                     QuasiPhcMethod::tower_adh}) {
        auto r = is_quasi_phc(x, m);
        CHECK(r.quasi_phc);
        CHECK(r.phc() == (x == FinitePretop::discrete(n)));
      }
    });
  }
  auto sub = find_adh_subcover(q3(), {Subset::of({0, 1}), Subset::of({1, 2}), Subset::of({2})});
  REQUIRE(sub);
  CHECK(*sub == std::vector<Subset>{Subset::of({1, 2})});
  CHECK(is_quasi_phc(d2(), QuasiPhcMethod::adh_cover).phc());
}

TEST_CASE("finite H-set checks") {
  auto p = FiniteTopology::from_pretop(p3());
  for (auto m : {HSetMethod::open_filter, HSetMethod::open_ultrafilter, HSetMethod::theta_adh}) {
    CHECK(hset_check_finite(p, Subset::of({2}), m));
    CHECK(hset_check_finite(p, Subset::full(3), m));
  }
  int cases = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      for_each_nonempty(n, [&](Subset a) {
        bool f = hset_check_finite(t, a, HSetMethod::open_filter);
        CHECK(f == hset_check_finite(t, a, HSetMethod::open_ultrafilter));
        CHECK(f == hset_check_finite(t, a, HSetMethod::theta_adh));
        ++cases;
      });
    }
  }
  CHECK(cases > 0);
  CHECK_THROWS_AS(hset_check_finite(p, Subset(), HSetMethod::theta_adh), Error);
}
