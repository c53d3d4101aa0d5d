#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fcx/ring.hpp"

using namespace fcx;

namespace {

space_model f3 = make_space(space_kind::finite, 3);

ring_elem fin(std::vector<rat> v) { return ring_elem::finite(f3, std::move(v)); }

rat rnd_rat(std::mt19937& eng) {
  static const rat pool[] = {rat(0), rat(1), rat(-1), rat(2),  rat(-3),
                             rat(1, 2), rat(-2, 3), rat(0), rat(5)};
  return pool[eng() % std::size(pool)];
}

ring_elem rnd_member(const space_model& s, std::mt19937& eng) {
  if (s.is_finite_model()) {
    std::vector<rat> v(static_cast<std::size_t>(s.n));
    for (auto& x : v) x = rnd_rat(eng);
    return ring_elem::finite(s, std::move(v));
  }
  if (s.kind == space_kind::cofinite_n) {
    rat c = rnd_rat(eng);
    std::vector<rat> pre(eng() % 4, c);
    for (auto& v : pre)
      if (eng() % 2) v = rnd_rat(eng);
    return ring_elem::countable(s, up_seq<rat>(std::move(pre), {c}));
  }
  std::vector<rat> pre(eng() % 4), blk(1 + eng() % 3);
  for (auto& v : pre) v = rnd_rat(eng);
  for (auto& v : blk) v = rnd_rat(eng);
  return ring_elem::countable(s, up_seq<rat>(std::move(pre), std::move(blk)),
                              rnd_rat(eng));
}

}  // namespace

TEST_CASE("lattice join on the finite model") {
  CHECK(join(fin({rat(1), rat(-2), rat(0)}), fin({rat(0), rat(3), rat(0)})) ==
        fin({rat(1), rat(3), rat(0)}));
}

TEST_CASE("orthogonal idempotents multiply to zero") {
  ring_elem chi0 = ring_elem::chi(f3, 0);
  ring_elem co = ring_elem::constant(f3, rat(1)) - chi0;
  CHECK((chi0 * co).is_zero());
}

TEST_CASE("join agrees with (f+g+|f-g|)/2 on all models") {
  std::mt19937 eng(5);
  for (space_kind k : {space_kind::finite, space_kind::discrete_n,
                       space_kind::cofinite_n, space_kind::conv_seq}) {
    space_model s = k == space_kind::finite ? f3 : make_space(k);
    ring_elem half = ring_elem::constant(s, rat(1, 2));
    for (int it = 0; it < 200; ++it) {
      ring_elem f = rnd_member(s, eng), g = rnd_member(s, eng);
      CHECK(join(f, g) == half * (f + g + abs(f - g)));
    }
  }
}

TEST_CASE("zero sets of basic elements") {
  CHECK(zero_set(fin({rat(0), rat(1), rat(2)})) == xset::finite(f3, 0b001));

  space_model cs = make_space(space_kind::conv_seq);
  ring_elem f =
      ring_elem::countable(cs, up_seq<rat>({}, {rat(0), rat(1)}), rat(0));
  xset z = zero_set(f);
  CHECK(z.up.at_inf);
  for (std::size_t i = 0; i < 10; ++i) CHECK(z.up.member(i) == (i % 2 == 0));
}

TEST_CASE("zero set identities on random pairs") {
  std::mt19937 eng(17);
  for (space_kind k : {space_kind::finite, space_kind::discrete_n,
                       space_kind::cofinite_n, space_kind::conv_seq}) {
    space_model s = k == space_kind::finite ? f3 : make_space(k);
    ring_elem one = ring_elem::constant(s, rat(1));
    for (int it = 0; it < 200; ++it) {
      ring_elem f = rnd_member(s, eng), g = rnd_member(s, eng);
      xset zf = zero_set(f), zg = zero_set(g);
      CHECK(zero_set(abs(f)) == zf);
      CHECK(zero_set(meet(abs(f), one)) == zf);
      CHECK(zero_set(f * f) == zf);
      CHECK(zero_set(f * f * f) == zf);
      CHECK(zero_set(f * f + g * g) == zf.intersect(zg));
      CHECK(zero_set(abs(f) + abs(g)) == zf.intersect(zg));
      CHECK(zero_set(f * g) == zf.unite(zg));
    }
    CHECK(zero_set(ring_elem::constant(s, rat(0))).is_all());
    CHECK(zero_set(one).is_empty());
  }
}

TEST_CASE("discontinuity sets follow the model rules") {
  space_model cs = make_space(space_kind::conv_seq);
  ring_elem osc =
      ring_elem::countable(cs, up_seq<rat>({}, {rat(0), rat(1)}), rat(0));
  disc_result d = discontinuity_set(osc);
  CHECK_FALSE(d.infinite);
  CHECK(d.pts.inf);
  CHECK(d.pts.points.empty());

  ring_elem settled =
      ring_elem::countable(cs, up_seq<rat>({rat(9)}, {rat(2)}), rat(2));
  CHECK(discontinuity_set(settled).pts.empty());

  space_model cn = make_space(space_kind::cofinite_n);
  ring_elem osc_cn = ring_elem::countable(cn, up_seq<rat>({}, {rat(0), rat(1)}));
  CHECK(discontinuity_set(osc_cn).infinite);
  ring_elem bump = ring_elem::countable(cn, up_seq<rat>({rat(7), rat(0)}, {rat(0)}));
  disc_result db = discontinuity_set(bump);
  CHECK_FALSE(db.infinite);
  CHECK(db.pts.points == std::vector<std::size_t>{0});

  space_model dn = make_space(space_kind::discrete_n);
  ring_elem any = ring_elem::countable(dn, up_seq<rat>({}, {rat(0), rat(1)}));
  CHECK(discontinuity_set(any).pts.empty());
}

TEST_CASE("membership separates the two rings") {
  space_model cs = make_space(space_kind::conv_seq);
  ring_elem chi_inf = ring_elem::chi_inf(cs);
  CHECK(membership(chi_inf, ring_kind::fcx).member);
  CHECK_FALSE(membership(chi_inf, ring_kind::cc).member);

  space_model cn = make_space(space_kind::cofinite_n);
  ring_elem osc = ring_elem::countable(cn, up_seq<rat>({}, {rat(0), rat(1)}));
  CHECK_FALSE(membership(osc, ring_kind::fcx).member);

  space_model dn = make_space(space_kind::discrete_n);
  ring_elem any = ring_elem::countable(dn, up_seq<rat>({}, {rat(0), rat(1)}));
  CHECK(membership(any, ring_kind::fcx).member);
  CHECK(membership(any, ring_kind::cc).member);
}

TEST_CASE("classification trichotomy with exact inverses") {
  ring_elem u = fin({rat(1), rat(2), rat(3)});
  CHECK(classify(u) == elem_class::unit);
  CHECK(inverse(u) == fin({rat(1), rat(1, 2), rat(1, 3)}));
  CHECK(u * inverse(u) == ring_elem::constant(f3, rat(1)));

  ring_elem zd = fin({rat(0), rat(1), rat(1)});
  CHECK(classify(zd) == elem_class::zero_divisor);
  ring_elem w = zero_divisor_witness(zd);
  CHECK(w == ring_elem::chi(f3, 0));
  CHECK((zd * w).is_zero());
  CHECK_THROWS_AS(inverse(zd), error);

  CHECK(classify(ring_elem::constant(f3, rat(0))) == elem_class::zero);
}

TEST_CASE("zero divisor witness reaches infinity") {
  space_model cs = make_space(space_kind::conv_seq);
  ring_elem f = ring_elem::constant(cs, rat(1)) - ring_elem::chi_inf(cs);
  ring_elem w = zero_divisor_witness(f);
  CHECK(w == ring_elem::chi_inf(cs));
  CHECK((f * w).is_zero());
}

TEST_CASE("level set witnesses") {
  ring_elem f = fin({rat(0), rat(1), rat(2)});
  ring_elem g = level_set_witness(f, rat(1), level_dir::geq);
  CHECK(g == fin({rat(-1), rat(0), rat(0)}));
  CHECK(zero_set(g) == xset::finite(f3, 0b110));
  ring_elem h = level_set_witness(f, rat(1), level_dir::leq);
  CHECK(zero_set(h) == xset::finite(f3, 0b011));
  // a level below min(f) captures everything for geq
  CHECK(zero_set(level_set_witness(f, rat(-5), level_dir::geq)).is_all());
}

TEST_CASE("closure: composites stay in the ring") {
  std::mt19937 eng(29);
  for (space_kind k : {space_kind::discrete_n, space_kind::cofinite_n,
                       space_kind::conv_seq}) {
    space_model s = make_space(k);
    for (int it = 0; it < 150; ++it) {
      ring_elem f = rnd_member(s, eng), g = rnd_member(s, eng);
      for (const ring_elem& h : {f + g, f * g, join(f, g), meet(f, g), abs(f)}) {
        disc_result d = discontinuity_set(h);
        CHECK_FALSE(d.infinite);
        upset dh = d.pts.as_upset();
        upset du = discontinuity_set(f).pts.as_upset().unite(
            discontinuity_set(g).pts.as_upset());
        CHECK(dh.subset_of(du));
      }
      CHECK(f.value_set().size() <= 8);
    }
  }
}

TEST_CASE("model mismatch is rejected") {
  space_model f2 = make_space(space_kind::finite, 2);
  CHECK_THROWS_AS(fin({rat(0), rat(1), rat(2)}) +
                      ring_elem::constant(f2, rat(1)),
                  error);
  CHECK_THROWS_AS(ring_elem::finite(f3, {rat(1)}), error);
  CHECK_THROWS_AS(ring_elem::chi_inf(make_space(space_kind::discrete_n)), error);
}
