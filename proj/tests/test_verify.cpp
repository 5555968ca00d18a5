#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mubs/constructions.hpp"
#include "mubs/verify.hpp"

using namespace mubs;

TEST_CASE("complete sets verify as complete") {
  for (const MubSet& set : {mub_master(3), mub_master(5), mub_alternative(3), mub_gf(3, 2),
                            mub_gr(1), mub_gr(2), mub_w4()}) {
    INFO("method " << method_name(set.method) << ", d = " << set.dimension);
    const VerificationReport report = check_mub_set(set);
    REQUIRE(report.verdict == Verdict::Complete);
    REQUIRE(report.basis_count == set.dimension + 1);
    for (const auto& bc : report.basis_checks) REQUIRE(bc.ok);
    for (const auto& pc : report.pair_checks) REQUIRE(pc.ok);
  }
}

TEST_CASE("composite master set verifies its claims only") {
  const VerificationReport report = check_mub_set(mub_master(6));
  REQUIRE(report.verdict == Verdict::ClaimsVerified);
  REQUIRE(report.pair_checks.size() == 3);
  for (const auto& pc : report.pair_checks) REQUIRE(pc.ok);
  REQUIRE_FALSE(report.completeness_claimed);
}

TEST_CASE("a partial but honest set verifies its claims") {
  const MubSet full = mub_master(3);
  MubSet partial;
  partial.dimension = 3;
  partial.conductor = 6;
  partial.method = MubMethod::Master;
  partial.completeness_claimed = false;
  partial.bases = {full.bases[0], full.bases[1]};
  partial.claimed_pairs = {{0, 1}};
  REQUIRE(check_mub_set(partial).verdict == Verdict::ClaimsVerified);
}

TEST_CASE("the p = 2 quadratic construction fails verification") {
  const VerificationReport report = check_mub_set(mub_alternative(2));
  REQUIRE(report.verdict == Verdict::Violation);
  for (const auto& bc : report.basis_checks) REQUIRE(bc.ok);  // bases are fine
  bool saw_failure = false;
  for (const auto& pc : report.pair_checks)
    if (!pc.ok) {
      saw_failure = true;
      REQUIRE(pc.first == 0);
      REQUIRE(pc.second == 1);
      REQUIRE(pc.witness.has_value());
      REQUIRE(pc.witness->detail.find("expected") != std::string::npos);
    }
  REQUIRE(saw_failure);
}

TEST_CASE("tampering is caught in exact and float mode") {
  MubSet set = mub_master(3);
  set.bases[0].vectors[0].exponents[0] = (set.bases[0].vectors[0].exponents[0] + 1) % 6;
  const VerificationReport exact = check_mub_set(set);
  REQUIRE(exact.verdict == Verdict::Violation);
  REQUIRE_FALSE(exact.basis_checks[0].ok);
  REQUIRE(exact.basis_checks[0].witness.has_value());

  CheckOptions fopts;
  fopts.mode = CheckMode::Float;
  const VerificationReport fl = check_mub_set(set, fopts);
  REQUIRE(fl.verdict == Verdict::Violation);
}

TEST_CASE("float mode agrees with exact mode on honest sets") {
  CheckOptions fopts;
  fopts.mode = CheckMode::Float;
  REQUIRE(check_mub_set(mub_master(5), fopts).verdict == Verdict::Complete);
  REQUIRE(check_mub_set(mub_w4(), fopts).verdict == Verdict::Complete);
  REQUIRE(check_mub_set(mub_alternative(2), fopts).verdict == Verdict::Violation);
}

TEST_CASE("orthonormality of mixed and unit bases") {
  Basis good;
  good.label = "ok";
  good.vectors = {BasisVector::unit(2, 0), BasisVector::unit(2, 1)};
  REQUIRE(check_orthonormal(good, 0, 4).ok);

  Basis dup;
  dup.label = "dup";
  dup.vectors = {BasisVector::unit(2, 0), BasisVector::unit(2, 0)};
  const BasisCheck bad = check_orthonormal(dup, 0, 4);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());

  Basis mixed;
  mixed.label = "mixed";
  mixed.vectors = {BasisVector::unit(2, 0), BasisVector::phase(2, 4, {0, 0})};
  REQUIRE_FALSE(check_orthonormal(mixed, 0, 4).ok);  // never orthogonal
}

TEST_CASE("malformed sets are rejected") {
  REQUIRE_THROWS_AS(check_mub_set(MubSet{}), std::invalid_argument);

  MubSet set = mub_master(3);
  SECTION("missing vector") {
    set.bases[0].vectors.pop_back();
    REQUIRE_THROWS_AS(check_mub_set(set), std::invalid_argument);
  }
  SECTION("exponent out of range") {
    set.bases[0].vectors[0].exponents[0] = 6;
    REQUIRE_THROWS_AS(check_mub_set(set), std::invalid_argument);
  }
  SECTION("vector conductor does not divide the set conductor") {
    set.bases[0].vectors[0].conductor = 4;
    REQUIRE_THROWS_AS(check_mub_set(set), std::invalid_argument);
  }
  SECTION("claimed pair out of range") {
    set.claimed_pairs.push_back({0, 99});
    REQUIRE_THROWS_AS(check_mub_set(set), std::invalid_argument);
  }
  SECTION("claimed pair not ordered") {
    set.claimed_pairs.push_back({2, 2});
    REQUIRE_THROWS_AS(check_mub_set(set), std::invalid_argument);
  }
  SECTION("conductor above the configured cap") {
    CheckOptions opts;
    opts.conductor_cap = 4;
    REQUIRE_THROWS_AS(check_mub_set(set, opts), std::invalid_argument);
  }
}

TEST_CASE("gauss sum preconditions") {
  REQUIRE_THROWS_AS(gauss_sum(0, 0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(gauss_sum(1, 0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(gauss_sum(2, 0, 4), std::invalid_argument);  // gcd = 2
  REQUIRE_THROWS_AS(gauss_sum(1, 0, 3), std::invalid_argument);  // uw + v odd
}

TEST_CASE("gauss sum magnitudes") {
  for (int64_t p : {3, 5, 7, 11, 13})
    for (int64_t u = 1; u < p; ++u) {
      const int64_t v = (u * p) % 2 == 0 ? 0 : 1;
      REQUIRE(gauss_sum_modulus_squared(u, v, p) == p);
    }
  REQUIRE(gauss_sum_modulus_squared(1, 0, 4) == 4);
  REQUIRE(gauss_sum_modulus_squared(1, 1, -3) == 3);
  REQUIRE(gauss_sum_modulus_squared(3, 1, 5) == 5);
}

TEST_CASE("master inner products are quadratic gauss sums") {
  for (int64_t d : {3, 5, 7}) {
    const auto ctx = cyclo_context(2 * d);
    for (int64_t a = 0; a < d; ++a)
      for (int64_t b = 0; b < d; ++b) {
        if (a == b) continue;
        for (int64_t alpha = 0; alpha < d; ++alpha)
          for (int64_t beta = 0; beta < d; ++beta) {
            // d <a alpha | b beta> as an exact sum over zeta_{2d}.
            CycloInt direct = CycloInt::zero(ctx);
            for (int64_t n = 0; n < d; ++n)
              direct += CycloInt::root(
                  ctx, mod_pos(master_exponent(d, b, beta, n) - master_exponent(d, a, alpha, n),
                               2 * d));
            const int64_t u = a - b;
            const int64_t v = -(a - b) * d - 2 * (beta - alpha);
            REQUIRE(direct == gauss_sum(u, v, d));
          }
      }
  }
}

TEST_CASE("hadamard structure of basis matrices") {
  for (int64_t d : {2, 3, 5, 7, 13}) {
    const MubSet set = mub_master(d);
    for (int64_t a = 0; a < d; ++a)
      REQUIRE(hadamard_check(basis_matrix(set.bases[static_cast<size_t>(a)], 2 * d)));
  }
  // The identity is not Hadamard, and a single tampered entry is caught.
  REQUIRE_FALSE(hadamard_check(ExactMatrix::identity(cyclo_context(4), 2)));
  ExactMatrix h = matrix_Ha(3, 1);
  h.at(0, 0) = CycloInt::root(h.context(), 1);
  REQUIRE_FALSE(hadamard_check(h));
  ExactMatrix rect(cyclo_context(4), 2, 3);
  REQUIRE_FALSE(hadamard_check(rect));
}

TEST_CASE("products of distinct basis matrices are scaled hadamard") {
  for (int64_t d : {3, 5, 7, 13}) {
    for (int64_t a = 0; a < d; ++a)
      for (int64_t b = a + 1; b < d; ++b) {
        const ExactMatrix prod = matrix_Ha(d, a).dagger() * matrix_Ha(d, b);
        REQUIRE(hadamard_check(prod, d));
      }
  }
}

TEST_CASE("basis equivalence up to order and phases") {
  const MubSet gr1 = mub_gr(1);
  const MubSet m2 = mub_master(2);
  const auto eq = bases_equivalent(gr1.bases[1], m2.bases[1]);
  REQUIRE(eq.has_value());
  REQUIRE(eq->conductor == 4);
  REQUIRE(eq->permutation == std::vector<int64_t>{1, 0});
  REQUIRE(eq->phase_exponents == std::vector<int64_t>{1, 3});

  // Reflexive with identity data.
  const auto self = bases_equivalent(m2.bases[0], m2.bases[0]);
  REQUIRE(self.has_value());
  REQUIRE(self->permutation == std::vector<int64_t>{0, 1});
  REQUIRE(self->phase_exponents == std::vector<int64_t>{0, 0});

  // Distinct unbiased bases are not equivalent; kinds must match.
  REQUIRE_FALSE(bases_equivalent(m2.bases[0], m2.bases[1]).has_value());
  REQUIRE_FALSE(bases_equivalent(m2.bases[0], m2.bases[2]).has_value());
  REQUIRE(bases_equivalent(m2.bases[2], m2.bases[2]).has_value());

  // The d = 4 ring construction reproduces the W bases basis-for-basis.
  const MubSet gr2 = mub_gr(2);
  const MubSet w = mub_w4();
  REQUIRE(bases_equivalent(gr2.basis_by_label("B_0"), w.basis_by_label("W_00")).has_value());
  REQUIRE(bases_equivalent(gr2.basis_by_label("B_1"), w.basis_by_label("W_10")).has_value());
  REQUIRE(bases_equivalent(gr2.basis_by_label("B_2"), w.basis_by_label("W_01")).has_value());
  REQUIRE(bases_equivalent(gr2.basis_by_label("B_3"), w.basis_by_label("W_11")).has_value());
  REQUIRE_FALSE(bases_equivalent(gr2.basis_by_label("B_0"), w.basis_by_label("W_10")).has_value());
}

TEST_CASE("counting bounds") {
  const MubBounds b6 = mub_bounds(6);
  REQUIRE(b6.lower == 3);
  REQUIRE(b6.upper == 7);
  REQUIRE_FALSE(b6.exact);
  REQUIRE(b6.factorization == std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {3, 1}});

  const MubBounds b15 = mub_bounds(15);
  REQUIRE(b15.lower == 4);
  REQUIRE(b15.upper == 16);

  const MubBounds b676 = mub_bounds(676);
  REQUIRE(b676.lower == 5);
  REQUIRE(b676.upper == 677);
  REQUIRE_FALSE(b676.exact);

  const MubBounds b9 = mub_bounds(9);
  REQUIRE(b9.lower == 10);
  REQUIRE(b9.upper == 10);
  REQUIRE(b9.exact);

  REQUIRE(mub_bounds(7).exact);
  REQUIRE_THROWS_AS(mub_bounds(1), std::invalid_argument);
}
