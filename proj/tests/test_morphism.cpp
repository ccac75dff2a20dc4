#include <algorithm>
#include <vector>

#include "doctest.h"
#include "matmor/error.hpp"
#include "matmor/fixtures.hpp"
#include "matmor/io.hpp"
#include "matmor/lorentzian.hpp"
#include "matmor/morphism.hpp"
#include "matmor/random_gen.hpp"

using namespace matmor;

namespace {

Matroid example56_m() { return Matroid::from_bases(3, {0b011, 0b101}); }
Matroid example56_n() { return Matroid::from_bases(3, {0b001, 0b010}); }

MatroidMorphism fano_fixture() {
  return io::morphism_from_json(fixtures::fano_projection());
}

bool image_spans(const MatroidMorphism& f) {
  return f.target().is_spanning(f.map().image(full_set(f.source().size())));
}

}  // namespace

TEST_CASE("induced matroid") {
  Rng rng(101);
  Matroid n = random_matroid(rng, 5);
  CHECK(induced_matroid(GroundMap::identity(5), n).rank_table() ==
        n.rank_table());

  // constant map onto a non-loop: everything becomes parallel
  GroundMap constant(4, 1, {1, 1, 1, 1});
  CHECK(induced_matroid(constant, Matroid::uniform(1, 1)).rank_table() ==
        Matroid::uniform(4, 1).rank_table());

  MatroidMorphism fano = fano_fixture();
  Matroid induced = induced_matroid(fano.map(), fano.target());
  CHECK(induced.size() == 14);
  CHECK(induced.rank() == 3);

  // induced rank functions satisfy the matroid axioms
  for (int trial = 0; trial < 20; ++trial) {
    int dn = rng.uniform_int(1, 8), dm = rng.uniform_int(1, 5);
    Matroid target = random_matroid(rng, dm);
    std::vector<int> targets(dn);
    for (int& t : targets) t = rng.uniform_int(1, dm);
    Matroid ind = induced_matroid(GroundMap(dn, dm, targets), target);
    CHECK(check_rank_axioms(dn, ind.rank_table()).ok());
  }
}

TEST_CASE("morphism checks across the three conditions") {
  Rng rng(103);
  auto [m, n] = random_quotient_pair(rng, 5);
  CHECK(is_morphism(GroundMap::identity(5), m, n).ok);

  MatroidMorphism fano = fano_fixture();
  CHECK(is_morphism(fano.map(), fano.source(), fano.target()).ok);

  // a loop sent to a non-loop violates condition (1)
  GroundMap f(1, 1, {1});
  auto verdict = is_morphism(f, Matroid::uniform(1, 0), Matroid::uniform(1, 1));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.s1 == 0);
  CHECK(verdict.s2 == singleton(1));
  CHECK(std::string(verdict.condition) == "rank-increment");

  // all three (plus the nested scan) agree on random triples
  for (int trial = 0; trial < 60; ++trial) {
    auto [src, tgt, map] =
        random_triple(rng, rng.uniform_int(1, 5), rng.uniform_int(1, 5));
    bool step = is_morphism(map, src, tgt).ok;
    CHECK(step == is_morphism_nested(map, src, tgt).ok);
    CHECK(step == is_morphism_via_cocircuits(map, src, tgt).ok);
    CHECK(step == is_morphism_via_flats(map, src, tgt).ok);
  }
}

TEST_CASE("quotient checks") {
  Rng rng(107);
  Matroid m = random_matroid(rng, 6);
  CHECK(is_quotient(m, m).ok);
  CHECK(is_quotient(m, m.truncated(std::max(0, m.rank() - 1))).ok);

  // Example 5.6: a weak map that is not a quotient
  Matroid em = example56_m(), en = example56_n();
  for (Subset s = 0; s <= full_set(3); ++s) {
    CHECK(en.rank(s) <= em.rank(s));  // weak map
  }
  auto verdict = is_quotient(em, en);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.s1 == subset_of({3}, 3));
  CHECK(verdict.s2 == subset_of({2, 3}, 3));

  CHECK_THROWS_AS((void)is_quotient(Matroid::uniform(3, 1),
                                    Matroid::uniform(4, 1)),
                  Error);
}

TEST_CASE("bases of a morphism") {
  Rng rng(109);
  // identity: bases of M, concentrated at rank(M)
  Matroid m = random_matroid(rng, 6);
  MatroidMorphism id(m, m, GroundMap::identity(6));
  auto b = b_vector(id);
  for (int k = 0; k <= 6; ++k) {
    if (k == m.rank()) {
      CHECK(b[k] == static_cast<long long>(m.bases().size()));
    } else {
      CHECK(b[k] == 0);
    }
  }

  // morphism to the terminal object: independent sets
  MatroidMorphism to_point(Matroid::uniform(4, 2), Matroid::uniform(1, 0),
                           GroundMap(4, 1, {1, 1, 1, 1}));
  CHECK(b_vector(to_point) == std::vector<long long>{1, 4, 6, 0, 0});

  CHECK(b_vector(fano_fixture()) ==
        std::vector<long long>{0, 0, 0, 224, 840, 1232, 0, 0, 0, 0, 0, 0, 0,
                               0, 0});
  CHECK(b_vector(io::morphism_from_json(fixtures::graph_hom())) ==
        std::vector<long long>{0, 0, 27, 79, 111, 75, 0, 0, 0, 0});
}

TEST_CASE("bases agree with the induced quotient") {
  Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    MatroidMorphism f =
        random_morphism(rng, rng.uniform_int(1, 6), rng.uniform_int(1, 4));
    auto direct = morphism_bases(f);
    if (image_spans(f)) {
      Matroid induced = induced_matroid(f.map(), f.target());
      CHECK(direct == quotient_bases(f.source(), induced));
      CHECK_FALSE(direct.empty());
    } else {
      CHECK(direct.empty());
    }
  }
}

TEST_CASE("loops and parallel pairs descend along quotients") {
  Rng rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(2, 7);
    auto [m, q] = random_quotient_pair(rng, n);
    for (int i = 1; i <= n; ++i) {
      if (m.is_loop(i)) CHECK(q.is_loop(i));
      for (int j = i + 1; j <= n; ++j) {
        if (m.parallel_indicator(i, j) == 1) {
          bool parallel_in_q = q.parallel_indicator(i, j) == 1;
          bool both_loops = q.is_loop(i) && q.is_loop(j);
          CHECK((parallel_in_q || both_loops));
        }
      }
    }
  }
}

TEST_CASE("b-vectors are ultra-log-concave") {
  Rng rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(1, 7);
    MatroidMorphism f = random_morphism(rng, n, rng.uniform_int(1, 5));
    auto b = b_vector(f);
    std::vector<Rat> a;
    for (long long c : b) a.push_back(Rat(static_cast<long>(c)));
    CHECK(is_ultra_log_concave(a).ok);
  }
}

TEST_CASE("delta-matroid family checks") {
  Rng rng(137);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.uniform_int(1, 6);
    auto [m, q] = random_quotient_pair(rng, n);
    CHECK(check_delta_matroid(n, quotient_bases(m, q)).ok);
  }

  // interval property violated
  auto verdict = check_delta_matroid(
      3, {subset_of({1}, 3), subset_of({1, 2, 3}, 3)});
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.property == 1);
  CHECK(verdict.s3 == subset_of({1, 2}, 3));

  // bases of a matroid: symmetric exchange reduces to basis exchange
  Matroid m = random_matroid(rng, 6);
  CHECK(check_delta_matroid(6, m.bases()).ok);

  CHECK_THROWS_AS((void)check_delta_matroid(3, {}), Error);
}

TEST_CASE("Higgs lifts") {
  Rng rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(1, 6);
    auto [m, q] = random_quotient_pair(rng, n);
    CHECK(higgs_lift(m, q, m.rank()).rank_table() == m.rank_table());
    CHECK(higgs_lift(m, q, q.rank()).rank_table() == q.rank_table());
  }

  MatroidMorphism fano = fano_fixture();
  Matroid induced = induced_matroid(fano.map(), fano.target());
  Matroid lift = higgs_lift(fano.source(), induced, 4);
  CHECK(lift.bases().size() == 840);

  Matroid u = Matroid::uniform(3, 2);
  CHECK_THROWS_AS((void)higgs_lift(u, u, 3), Error);  // empty slice
  CHECK_THROWS_AS((void)higgs_lift(example56_m(), example56_n(), 1), Error);
}
