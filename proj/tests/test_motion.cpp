#include <catch2/catch_amalgamated.hpp>

#include "weakgeo/motion.hpp"
#include "weakgeo/rng.hpp"

using namespace weakgeo;

namespace {

QModel q_model(long num, long den = 1) {
  return QModel(Rat(num, den), "q:c=" + Rat(num, den).str());
}

MetricModel<Fp> gf_model(std::int64_t p, std::int64_t c) {
  return MetricModel<Fp>(Fp(c, p), "gf:" + std::to_string(p) + ":c=" + std::to_string(c), p);
}

QPoint qp(long x, long y) { return {Rat(x), Rat(y)}; }

QPoint sample_point(Rng& rng) { return {rng.rat(), rng.rat()}; }

QLine sample_line(Rng& rng) {
  for (;;) {
    QPoint a = sample_point(rng), b = sample_point(rng);
    if (a != b) return line_through(a, b);
  }
}

Motion<Rat> sample_motion(const QModel& m, Rng& rng) {
  // product of up to three reflections plus a point reflection: covers
  // odd/even, fixed-point-free and rotational cases
  Motion<Rat> acc = identity_motion(m);
  const int n = static_cast<int>(rng.below(4));
  for (int i = 0; i < n; ++i) acc = compose(acc, line_reflection(m, sample_line(rng)));
  if (rng.below(2) == 0) acc = compose(acc, point_reflection(m, sample_point(rng)));
  return acc;
}

}  // namespace

TEST_CASE("reflections compose to the identity") {
  const auto m = q_model(-2);
  Rng rng = Rng::stream(51, 0);
  for (int i = 0; i < 100; ++i) {
    const QLine l = sample_line(rng);
    const auto s = line_reflection(m, l);
    CHECK(preserves_form(m, s));
    CHECK(is_identity(m, compose(s, s)));
    CHECK(is_involution(m, s));
  }
  CHECK(identity_motion(m).apply(qp(3, -4)) == qp(3, -4));
}

TEST_CASE("group laws and isometry on sampled motions") {
  const auto m = q_model(1);
  Rng rng = Rng::stream(53, 0);
  for (int i = 0; i < 150; ++i) {
    const auto a = sample_motion(m, rng), b = sample_motion(m, rng), c = sample_motion(m, rng);
    CHECK(preserves_form(m, compose(a, b)));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(is_identity(m, compose(a, invert(a))));
    const QPoint p = sample_point(rng), q = sample_point(rng);
    CHECK(congruent(m, a.apply(p), a.apply(q), p, q));
  }
}

TEST_CASE("conjugate of a line reflection is the reflection in the image line") {
  const auto m = q_model(-2);
  Rng rng = Rng::stream(57, 0);
  for (int i = 0; i < 100; ++i) {
    const QLine l = sample_line(rng);
    const auto alpha = sample_motion(m, rng);
    const auto conj = conjugate(line_reflection(m, l), alpha);
    // oracle: compare both maps on three non-collinear points
    QPoint s0 = sample_point(rng), s1 = sample_point(rng), s2 = sample_point(rng);
    if (collinear(s0, s1, s2)) continue;
    QPoint p1 = alpha.apply(foot(m, s0, l));
    QPoint p2 = alpha.apply(foot(m, s1, l));
    if (p1 == p2) continue;
    const QLine image = line_through(p1, p2);
    const auto expected = line_reflection(m, image);
    CHECK(conj.apply(s0) == expected.apply(s0));
    CHECK(conj.apply(s1) == expected.apply(s1));
    CHECK(conj.apply(s2) == expected.apply(s2));
    CHECK(conj == expected);
  }
}

TEST_CASE("involution classification: in_S and in_P") {
  const auto m = q_model(1);
  const QLine y0(Rat(0), Rat(1), Rat(0));
  const auto s = line_reflection(m, y0);
  auto fixed = in_S(m, s);
  REQUIRE(fixed.has_value());
  CHECK(*fixed == y0);
  CHECK_FALSE(in_P(m, s).has_value());

  const auto rho = point_reflection(m, qp(1, 1));
  auto center = in_P(m, rho);
  REQUIRE(center.has_value());
  CHECK(*center == qp(1, 1));
  CHECK_FALSE(in_S(m, rho).has_value());

  // a translation is not involutory
  const auto trans = compose(point_reflection(m, qp(1, 0)), point_reflection(m, qp(0, 0)));
  CHECK_FALSE(in_S(m, trans).has_value());
  CHECK_FALSE(in_P(m, trans).has_value());
  CHECK_FALSE(is_involution(m, trans));

  Rng rng = Rng::stream(59, 0);
  for (int i = 0; i < 100; ++i) {
    const QLine l = sample_line(rng);
    auto back = in_S(m, line_reflection(m, l));
    REQUIRE(back.has_value());
    CHECK(*back == l);
  }
}

TEST_CASE("stroke relation") {
  const auto m = q_model(1);
  const QLine x0(Rat(1), Rat(0), Rat(0)), y0(Rat(0), Rat(1), Rat(0));
  REQUIRE(perpendicular(m, x0, y0));
  CHECK(stroke(m, line_reflection(m, x0), line_reflection(m, y0)));
  CHECK_FALSE(stroke(m, line_reflection(m, x0), line_reflection(m, x0)));
  // incidence reading: point on line
  const QPoint a = qp(2, 0);
  CHECK(y0.contains(a));
  CHECK(stroke(m, point_reflection(m, a), line_reflection(m, y0)));
  const auto prod = compose(point_reflection(m, a), line_reflection(m, y0));
  auto perp = in_S(m, prod);
  REQUIRE(perp.has_value());
  CHECK(perp->contains(a));
  CHECK(perpendicular(m, *perp, y0));
  // point off the line: no stroke
  CHECK_FALSE(stroke(m, point_reflection(m, qp(2, 1)), line_reflection(m, y0)));
}

TEST_CASE("three reflections theorem cases") {
  const auto mq = q_model(1);
  const QLine a(Rat(1), Rat(2), Rat(3)), c(Rat(1), Rat(-1), Rat(2));
  auto same = three_reflections(mq, a, a, c);
  REQUIRE(same.has_value());
  CHECK(*same == c);

  // concurrent pencil over GF(5): lines through the origin
  const auto m5 = gf_model(5, 2);
  const Line<Fp> g1(Fp(1, 5), Fp(0, 5), Fp(0, 5)), g2(Fp(0, 5), Fp(1, 5), Fp(0, 5)),
      g3(Fp(1, 5), Fp(1, 5), Fp(0, 5));
  auto line = three_reflections(m5, g1, g2, g3);
  REQUIRE(line.has_value());
  CHECK(line->contains(Point<Fp>{Fp(0, 5), Fp(0, 5)}));

  // common perpendicular: three vertical lines, perpendicular y=0
  const QLine v1(Rat(1), Rat(0), Rat(0)), v2(Rat(1), Rat(0), Rat(-1)), v3(Rat(1), Rat(0), Rat(-3));
  auto vert = three_reflections(mq, v1, v2, v3);
  REQUIRE(vert.has_value());
  CHECK(vert->v == Rat(0));

  // generic triple: glide reflection, no line
  const QLine w1(Rat(1), Rat(0), Rat(0)), w2(Rat(0), Rat(1), Rat(0)), w3(Rat(1), Rat(1), Rat(-5));
  CHECK_FALSE(three_reflections(mq, w1, w2, w3).has_value());
}

TEST_CASE("glide decomposition") {
  const auto m = q_model(1);
  const QLine y0(Rat(0), Rat(1), Rat(0));
  // translate by (2,0) after reflecting in y=0
  Motion<Rat> glide = line_reflection(m, y0);
  glide.t = glide.t + qp(2, 0);
  auto dec = glide_decompose(m, glide);
  REQUIRE(dec.has_value());
  CHECK(dec->axis == y0);
  CHECK(dec->n.y == Rat(0));
  CHECK(dec->mpt.y == Rat(0));
  CHECK(compose(line_reflection(m, dec->b), point_reflection(m, dec->n)) == glide);
  CHECK(compose(point_reflection(m, dec->mpt), line_reflection(m, dec->d)) == glide);
  CHECK(perpendicular(m, dec->b, dec->axis));
  CHECK(perpendicular(m, dec->d, dec->axis));

  CHECK_FALSE(glide_decompose(m, line_reflection(m, y0)).has_value());  // pure reflection
  const auto rot = compose(line_reflection(m, QLine(Rat(1), Rat(0), Rat(0))), line_reflection(m, y0));
  CHECK_FALSE(glide_decompose(m, rot).has_value());  // even motion

  Rng rng = Rng::stream(61, 0);
  int decomposed = 0;
  for (int i = 0; i < 100; ++i) {
    const auto alpha = compose(point_reflection(m, sample_point(rng)),
                               line_reflection(m, sample_line(rng)));
    if (is_involution(m, alpha)) continue;
    auto g = glide_decompose(m, alpha);
    REQUIRE(g.has_value());
    CHECK(g->axis.contains(g->n));
    CHECK(g->axis.contains(g->mpt));
    ++decomposed;
  }
  CHECK(decomposed > 50);
}

TEST_CASE("non-elliptic and characteristic tests over finite models") {
  const auto m5 = gf_model(5, 2);
  CHECK(model_is_nonelliptic(m5));
  CHECK(model_characteristic_ne3(m5).ne3);
  const auto m7 = gf_model(7, 1);
  CHECK(model_is_nonelliptic(m7));
  CHECK(model_characteristic_ne3(m7).ne3);
  const auto m3 = gf_model(3, 1);
  CHECK(model_is_nonelliptic(m3));
  const auto rep = model_characteristic_ne3(m3);
  CHECK_FALSE(rep.ne3);
  REQUIRE(rep.witness.has_value());
  const auto [wa, wb] = *rep.witness;
  CHECK(wa != wb);
  const auto ab = compose(point_reflection(m3, wa), point_reflection(m3, wb));
  CHECK(is_identity(m3, compose(ab, compose(ab, ab))));
}

TEST_CASE("swapping motion") {
  const auto m = q_model(1);
  CHECK(find_swapping_motion(m, qp(2, 3), qp(2, 3), qp(9, 9)) == identity_motion(m));
  auto swap = find_swapping_motion(m, qp(1, 0), qp(-1, 0), qp(0, 5));
  REQUIRE(swap.has_value());
  CHECK(*swap == line_reflection(m, QLine(Rat(1), Rat(0), Rat(0))));
  CHECK(swap->apply(qp(1, 0)) == qp(-1, 0));
  CHECK(swap->apply(qp(0, 5)) == qp(0, 5));
  CHECK_FALSE(find_swapping_motion(m, qp(1, 0), qp(-1, 0), qp(1, 5)).has_value());
}

TEST_CASE("group congruence equals norm congruence, with the GF(5) enumeration oracle") {
  const auto m = gf_model(5, 2);
  const auto motions = enumerate_motions(m);
  CHECK(motions.size() == 300);  // |O(2,5)| * 25 translations
  const auto pts = all_points(m);
  auto index = [&](const Point<Fp>& p) {
    return static_cast<std::size_t>(p.x.v * 5 + p.y.v);
  };
  // mark all motion-images of every ordered pair
  std::vector<bool> reach(625 * 625, false);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      const std::size_t from = index(a) * 25 + index(b);
      for (const auto& mo : motions) {
        const auto ia = mo.apply(a), ib = mo.apply(b);
        reach[from * 625 + index(ia) * 25 + index(ib)] = true;
      }
    }
  long checked = 0;
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts)
        for (const auto& d : pts) {
          const std::size_t ab = index(a) * 25 + index(b), cd = index(c) * 25 + index(d);
          const bool def1 = reach[ab * 625 + cd] || reach[ab * 625 + (index(d) * 25 + index(c))];
          const bool normeq = segment_congruent_group(m, a, b, c, d);
          if (def1 != normeq) {
            REQUIRE(def1 == normeq);
          }
          ++checked;
        }
  CHECK(checked == 390625);
  // spot checks from the contract
  CHECK(segment_congruent_group(m, pts[3], pts[17], pts[3], pts[17]));
  CHECK_FALSE(segment_congruent_group(m, pts[4], pts[4], pts[4], pts[9]));
}
