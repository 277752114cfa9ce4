#include "doctest.h"
#include "skewqp/gen.hpp"
#include "skewqp/sga.hpp"

#include <random>

using namespace skewqp;

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Test-side rank computation over Q(zeta_n) by Gaussian elimination.
int rank_over_field(std::vector<std::vector<Cyclotomic>> rows, int order) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols; ++col) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Cyclotomic inv = rows[rank][col].inv();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col].is_zero()) continue;
      Cyclotomic factor = rows[r][col] * inv;
      for (size_t c2 = 0; c2 < cols; ++c2) rows[r][c2] -= factor * rows[rank][c2];
    }
    ++rank;
    (void)order;
  }
  return rank;
}

}  // namespace

TEST_CASE("product rule") {
  ExampleBundle b = fixture("typeA4");
  const Quiver& q = b.quiver;
  VertexIdx v = q.vertex("0_1_2");

  SGAElement ev = SGAElement::term(3, Path::trivial(v), 0, Cyclotomic::one(3));
  CHECK(sga_mul(q, b.action, ev, ev) == ev);

  // (alpha (x) g)(beta (x) g) = alpha.g(beta) (x) g^2 when composable.
  ArrowIdx gamma = q.arrow_id("a1(1_0_2)");  // (1,0,2) -> (0,1,2)
  SGAElement x = SGAElement::term(3, Path::of({gamma}), 1, Cyclotomic::one(3));
  SGAElement y = SGAElement::term(3, Path::of({q.arrow_id("a1(1_1_1)")}), 1, Cyclotomic::one(3));
  // g(a1(1_1_1)) = a2(1_1_1) with target (1,0,2) = src(gamma): composable.
  SGAElement xy = sga_mul(q, b.action, x, y);
  SGAElement expected = SGAElement::term(
      3, Path::of({gamma, q.arrow_id("a2(1_1_1)")}), 2, Cyclotomic::one(3));
  CHECK(xy == expected);

  // Non-composable terms vanish.
  SGAElement z = SGAElement::term(3, Path::of({q.arrow_id("a3(0_0_3)")}), 0, Cyclotomic::one(3));
  CHECK(sga_mul(q, b.action, x, z).is_zero());
}

TEST_CASE("type (4) product rule with idempotents") {
  // (alpha (x) e_mu)(beta (x) e_nu) = alpha.beta (x) e_nu if nu = mu + b(beta), else 0.
  // Quiver: loop beta at a fixed vertex u with g(beta) = zeta*beta, and an
  // arrow alpha: u -> w, both vertices fixed.
  Quiver q({"u", "w"}, {Arrow{"alpha", 0, 1}, Arrow{"beta", 0, 0}});
  const int n = 4;
  CyclicAction action(q, n, {0, 1}, {ArrowImage{0, 0}, ArrowImage{1, 1}});
  auto e = [&](ArrowIdx a, int mu) {
    SGAElement out(n);
    for (int i = 0; i < n; ++i)
      out.add(Path::of({a}), i, Cyclotomic::zeta_pow(n, i * mu) * frac(1, n));
    return out;
  };
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      SGAElement prod = sga_mul(q, action, e(0, mu), e(1, nu));
      if (nu == (mu + 1) % n) {
        SGAElement expected(n);
        for (int i = 0; i < n; ++i)
          expected.add(Path::of({0, 1}), i, Cyclotomic::zeta_pow(n, i * nu) * frac(1, n));
        CHECK(prod == expected);
      } else {
        CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("group algebra idempotents") {
  ExampleBundle b = fixture("typeA4");
  const Quiver& q = b.quiver;
  VertexIdx v = q.vertex("1_1_1");

  SGAElement e0 = idempotent_e(q, b.action, v, 0);
  SGAElement expected(3);
  for (int i = 0; i < 3; ++i) expected.add(Path::trivial(v), i, Cyclotomic(3, frac(1, 3)));
  CHECK(e0 == expected);

  for (int mu = 0; mu < 3; ++mu) {
    SGAElement emu = idempotent_e(q, b.action, v, mu);
    CHECK(sga_mul(q, b.action, emu, emu) == emu);
    for (int nu = 0; nu < 3; ++nu) {
      if (nu == mu) continue;
      CHECK(sga_mul(q, b.action, emu, idempotent_e(q, b.action, v, nu)).is_zero());
    }
  }
  SGAElement sum(3);
  for (int mu = 0; mu < 3; ++mu) sum += idempotent_e(q, b.action, v, mu);
  CHECK(sum == SGAElement::term(3, Path::trivial(v), 0, Cyclotomic::one(3)));

  CHECK_THROWS_AS(idempotent_e(q, b.action, q.vertex("0_0_3"), 0), std::invalid_argument);
}

TEST_CASE("eta idempotent and corner property") {
  ExampleBundle b = fixture("typeA4");
  const Quiver& q = b.quiver;
  Representatives reps = b.representatives();
  SkewQP skew = build_skew_qp(q, b.potential, b.action, reps);

  SGAElement eta = eta_idempotent(q, b.action, reps);
  // The mu-sum collapses: eta is the plain sum of the chosen vertices.
  SGAElement collapsed(3);
  for (VertexIdx v : reps.eps_prime) collapsed.add(Path::trivial(v), 0, Cyclotomic::one(3));
  for (VertexIdx v : reps.eps_fixed) collapsed.add(Path::trivial(v), 0, Cyclotomic::one(3));
  CHECK(eta == collapsed);
  CHECK(sga_mul(q, b.action, eta, eta) == eta);

  // J lands in the corner: eta . J(x) . eta = J(x).
  for (ArrowIdx a = 0; a < skew.quiver.num_arrows(); ++a) {
    SGAElement j = embed_arrow(skew, a);
    CHECK(sga_mul(q, b.action, sga_mul(q, b.action, eta, j), eta) == j);
  }
  for (VertexIdx v = 0; v < skew.quiver.num_vertices(); ++v) {
    SGAElement j = embed_vertex(skew, v);
    CHECK(sga_mul(q, b.action, sga_mul(q, b.action, eta, j), eta) == j);
  }
}

TEST_CASE("the embedding J") {
  ExampleBundle b = fixture("typeA4");
  SkewQP skew = build_skew_qp(b.quiver, b.potential, b.action, b.representatives());
  const Quiver& q = b.quiver;
  const Quiver& qg = skew.quiver;

  // Vertices map to idempotents.
  CHECK(embed_vertex(skew, qg.vertex("eta(0_0_3)")) ==
        SGAElement::term(3, Path::trivial(q.vertex("0_0_3")), 0, Cyclotomic::one(3)));

  // J(delta tilde) = delta (x) g^2.
  CHECK(embed_arrow(skew, qg.arrow_id("t1(a2(0_2_1))")) ==
        SGAElement::term(3, Path::of({q.arrow_id("a2(0_2_1)")}), 2, Cyclotomic::one(3)));

  // J(lambda~^mu theta~^mu) = (1/3) sum_k zeta^{k mu} (lambda.g^k(theta) (x) g^k).
  ArrowIdx lambda = q.arrow_id("a2(1_1_1)");
  ArrowIdx theta = q.arrow_id("a3(0_1_2)");
  for (int mu = 0; mu < 3; ++mu) {
    Path p = Path::of({qg.arrow_id("t3(a2(1_1_1)," + std::to_string(mu) + ")"),
                       qg.arrow_id("t2(a3(0_1_2)," + std::to_string(mu) + ")")});
    SGAElement expected(3);
    for (int k = 0; k < 3; ++k)
      expected.add(Path::of({lambda, b.action.star(theta, k)}), k,
                   Cyclotomic::zeta_pow(3, k * mu) * frac(1, 3));
    CHECK(embed_path(skew, p) == expected);
  }

  // Images of distinct arrows are linearly independent over Q(zeta_3).
  std::vector<SGATerm> basis;
  std::vector<SGAElement> images;
  for (ArrowIdx a = 0; a < qg.num_arrows(); ++a) {
    images.push_back(embed_arrow(skew, a));
    for (const auto& [t, c] : images.back().terms()) basis.push_back(t);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::vector<std::vector<Cyclotomic>> rows;
  for (const SGAElement& img : images) {
    std::vector<Cyclotomic> row(basis.size(), Cyclotomic::zero(3));
    for (const auto& [t, c] : img.terms())
      row[std::lower_bound(basis.begin(), basis.end(), t) - basis.begin()] = c;
    rows.push_back(std::move(row));
  }
  CHECK(rank_over_field(std::move(rows), 3) == static_cast<int>(qg.num_arrows()));
}

TEST_CASE("multiplication is associative and bilinear") {
  ExampleBundle b = fixture("typeA4");
  const Quiver& q = b.quiver;
  std::mt19937 rng(99);
  auto random_elem = [&]() {
    SGAElement out(3);
    for (int k = 0; k < 3; ++k) {
      int exp = static_cast<int>(rng() % 3);
      Cyclotomic coeff = Cyclotomic::zeta_pow(3, static_cast<long>(rng() % 3)) *
                         frac(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
      if (rng() % 2) {
        out.add(Path::trivial(static_cast<VertexIdx>(rng() % q.num_vertices())), exp, coeff);
      } else {
        out.add(Path::of({static_cast<ArrowIdx>(rng() % q.num_arrows())}), exp, coeff);
      }
    }
    return out;
  };
  for (int trial = 0; trial < 60; ++trial) {
    SGAElement x = random_elem(), y = random_elem(), z = random_elem();
    CHECK(sga_mul(q, b.action, sga_mul(q, b.action, x, y), z) ==
          sga_mul(q, b.action, x, sga_mul(q, b.action, y, z)));
    SGAElement yz = y;
    yz += z;
    SGAElement lhs = sga_mul(q, b.action, x, yz);
    SGAElement rhs = sga_mul(q, b.action, x, y);
    rhs += sga_mul(q, b.action, x, z);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generator identities on the s=4 QP") {
  ExampleBundle b = fixture("typeA4");
  SkewQP skew = build_skew_qp(b.quiver, b.potential, b.action, b.representatives());
  const Quiver& qg = skew.quiver;

  // dW_G(gamma tilde) = -alpha~ beta~ + sum_mu lambda~^mu theta~^mu.
  PathCombination dg = cyclic_derivative(qg, skew.potential, qg.arrow_id("t1(a1(1_0_2))"));
  PathCombination expected(3);
  expected.add(Path::of({qg.arrow_id("t1(a3(0_0_3))"), qg.arrow_id("t1(a2(0_1_2))")}),
               -Cyclotomic::one(3));
  for (int mu = 0; mu < 3; ++mu) {
    expected.add(Path::of({qg.arrow_id("t3(a2(1_1_1)," + std::to_string(mu) + ")"),
                           qg.arrow_id("t2(a3(0_1_2)," + std::to_string(mu) + ")")}),
                 Cyclotomic::one(3));
  }
  CHECK(dg == expected);

  GeneratorReport report = verify_generator_identities(skew);
  CHECK(report.all_pass());
  CHECK(report.rows.size() == 6);
  size_t t1 = 0, t2 = 0, t3 = 0;
  for (const auto& row : report.rows) {
    if (row.type == ArrowType::T1) ++t1;
    if (row.type == ArrowType::T2) {
      ++t2;
      CHECK(row.refined.size() == 3);
    }
    if (row.type == ArrowType::T3) ++t3;
  }
  CHECK(t1 == 4);
  CHECK(t2 == 1);
  CHECK(t3 == 1);
}

TEST_CASE("generator identities hold on every bundle") {
  for (const char* name : {"typeA7", "A5xD4"}) {
    CAPTURE(name);
    ExampleBundle bundle = fixture(name);
    SkewQP sk = build_skew_qp(bundle.quiver, bundle.potential, bundle.action,
                              bundle.representatives());
    CHECK(verify_generator_identities(sk).all_pass());
  }
}

TEST_CASE("generator identities including the factor-n case") {
  ExampleBundle b = fixture("A5xA3");
  SkewQP skew = build_skew_qp(b.quiver, b.potential, b.action, b.representatives());
  GeneratorReport report = verify_generator_identities(skew);
  CHECK(report.all_pass());
  bool has_t4 = false;
  for (const auto& row : report.rows)
    if (row.type == ArrowType::T4) has_t4 = true;
  CHECK(has_t4);

  // A broken potential shows up as a FAIL row, not an exception.
  SkewQP tampered = skew;
  Potential broken(2);
  bool first = true;
  for (const auto& [cycle, coeff] : skew.potential.terms()) {
    broken.add(cycle, first ? coeff * Cyclotomic(2, 2) : coeff);
    first = false;
  }
  tampered.potential = broken;
  GeneratorReport bad = verify_generator_identities(tampered);
  CHECK(!bad.all_pass());
  bool any_mismatch_text = false;
  for (const auto& row : bad.rows)
    if (!row.pass && !row.mismatch.empty()) any_mismatch_text = true;
  CHECK(any_mismatch_text);
}

TEST_CASE("generator identities on loops and fractional coefficients") {
  ExampleBundle a2 = gen_type_a(2);
  SkewQP skew = build_skew_qp(a2.quiver, a2.potential, a2.action,
                              choose_representatives(a2.quiver, a2.action));
  GeneratorReport report = verify_generator_identities(skew);
  CHECK(report.all_pass());
  CHECK(report.rows.size() == 1);
}
