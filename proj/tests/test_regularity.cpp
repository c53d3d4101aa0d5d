#include <catch2/catch_amalgamated.hpp>

#include "fcx/regularity.hpp"

using namespace fcx;

TEST_CASE("regular witness on the finite model") {
  space_model f3 = finite_space(3);
  ring_elem f = ring_elem::finite(f3, {rat(0), rat(2), rat(3)});
  ring_elem g = regular_witness(f);
  CHECK(g == ring_elem::finite(f3, {rat(0), rat(1, 2), rat(1, 3)}));
  CHECK(f * f * g == f);
}

TEST_CASE("regular witness on the convergent sequence") {
  space_model cs = make_space(space_kind::conv_seq);
  ring_elem f =
      ring_elem::countable(cs, up_seq<rat>({}, {rat(0), rat(3)}), rat(0));
  ring_elem g = regular_witness(f);
  CHECK(g == ring_elem::countable(cs, up_seq<rat>({}, {rat(0), rat(1, 3)}),
                                  rat(0)));
  CHECK(f * f * g == f);
  CHECK(is_member(g));
}

TEST_CASE("regular witness on cofinite N stays in the ring") {
  space_model cn = make_space(space_kind::cofinite_n);
  ring_elem f =
      ring_elem::countable(cn, up_seq<rat>({rat(0), rat(0)}, {rat(5)}));
  ring_elem g = regular_witness(f);
  CHECK(g == ring_elem::countable(cn, up_seq<rat>({rat(0), rat(0)}, {rat(1, 5)})));
  CHECK(f * f * g == f);
  CHECK(is_member(g));

  ring_elem osc = ring_elem::countable(cn, up_seq<rat>({}, {rat(0), rat(1)}));
  CHECK_THROWS_AS(regular_witness(osc), error);
}

TEST_CASE("space regularity report per model") {
  for (space_kind k : {space_kind::discrete_n, space_kind::conv_seq}) {
    regularity_report r = space_regularity_report(make_space(k));
    CHECK(r.fcp);
    CHECK(r.baer);
    CHECK_FALSE(r.baer_witness.has_value());
  }
  regularity_report rf = space_regularity_report(finite_space(4));
  CHECK(rf.fcp);
  CHECK(rf.baer);

  space_model cn = make_space(space_kind::cofinite_n);
  regularity_report rc = space_regularity_report(cn);
  CHECK(rc.fcp);
  CHECK_FALSE(rc.baer);
  REQUIRE(rc.baer_witness.has_value());
  CHECK(*rc.baer_witness == xset::countable(cn, upset::evens()));
  CHECK_FALSE(eventually_clopen(cn, *rc.baer_witness));
  CHECK(rc.relativization == "representable sets only");
}

TEST_CASE("idempotent cozero witnesses") {
  space_model cs = make_space(space_kind::conv_seq);
  xset evens = xset::countable(cs, upset::evens());
  idempotent_witness w = idempotent_coz_witness(cs, evens);
  REQUIRE(w.e.has_value());
  CHECK(*w.e * *w.e == *w.e);
  CHECK(cozero_set(*w.e) == evens);
  CHECK(discontinuity_set(*w.e).pts.inf);

  space_model cn = make_space(space_kind::cofinite_n);
  idempotent_witness wc =
      idempotent_coz_witness(cn, xset::countable(cn, upset::evens()));
  CHECK_FALSE(wc.e.has_value());
  CHECK_FALSE(wc.failure_reason.empty());

  space_model f3 = finite_space(3);
  idempotent_witness wf = idempotent_coz_witness(f3, xset::finite(f3, 0b101));
  REQUIRE(wf.e.has_value());
  CHECK(*wf.e == ring_elem::finite(f3, {rat(1), rat(0), rat(1)}));
}

TEST_CASE("annihilators are idempotent-generated over Finite(n)") {
  space_model f3 = finite_space(3);
  ring_elem f = ring_elem::finite(f3, {rat(0), rat(1), rat(0)});
  ring_elem e = pp_annihilator_idempotent(f);
  CHECK(e == ring_elem::finite(f3, {rat(1), rat(0), rat(1)}));
  CHECK(e * e == e);
  CHECK(ideal_from_generators({e}, 3) == annihilator({f}, 3));

  ring_elem unit = ring_elem::constant(f3, rat(2));
  CHECK(pp_annihilator_idempotent(unit).is_zero());
  ring_elem zero = ring_elem::constant(f3, rat(0));
  CHECK(pp_annihilator_idempotent(zero) == ring_elem::constant(f3, rat(1)));

  space_model dn = make_space(space_kind::discrete_n);
  CHECK_THROWS_AS(pp_annihilator_idempotent(ring_elem::constant(dn, rat(1))),
                  error);
}

TEST_CASE("Thm-style triple agrees on the sign basis") {
  for (int n = 1; n <= 3; ++n) {
    space_model s = finite_space(n);
    for (const ring_elem& f : sign_basis(n)) {
      ring_elem g = regular_witness(f);
      CHECK(f * f * g == f);
      CHECK(is_clopen_in_subspace(s, zero_set(f), {}));
      ring_elem e = pp_annihilator_idempotent(f);
      CHECK(e * e == e);
    }
  }
}
