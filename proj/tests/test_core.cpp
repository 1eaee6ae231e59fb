#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fgt/fgt.hpp"
#include "oracles.hpp"

using namespace fgt;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fgt::Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("number theory agrees with brute force", "[number_theory]") {
  for (std::uint64_t n = 0; n <= 400; ++n) {
    REQUIRE(is_prime(n) == oracle::is_prime(n));
    if (n >= 1) REQUIRE(prime_divisors(n) == oracle::prime_divisors(n));
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      unsigned v = 0;
      for (std::uint64_t m = n; m % p == 0; m /= p) ++v;
      REQUIRE(vp_valuation(n, p) == v);
      REQUIRE(p_part(n, p) == ipow(p, v));
    }
  }
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (std::uint64_t a = 1; a < n; ++a) {
      std::uint64_t x = 1;
      for (std::uint64_t e = 0; e < 70; ++e) {
        REQUIRE(powmod(a, e, n) == x);
        x = x * a % n;
      }
      if (oracle::gcd(a, n) != 1) continue;
      std::uint64_t k = 1;
      for (std::uint64_t y = a % n; y != 1; y = y * a % n) ++k;
      REQUIRE(multiplicative_order(a, n) == k);
      REQUIRE(inverse_mod(a, n) * a % n == 1);
    }
  }
  REQUIRE(mod_floor(-1, 7) == 6);
  REQUIRE(mod_floor(-14, 7) == 0);
  REQUIRE(mod_floor(15, 7) == 1);
}

TEST_CASE("finite fields", "[field]") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
      {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}};
  for (auto [p, k] : fields) {
    const FieldSpec f = field_make(p, k);
    INFO(field_name(f));
    REQUIRE(f.size == static_cast<std::uint32_t>(ipow(p, k)));
    const FieldElement g = field_primitive(f);
    std::uint64_t ord = 1;
    for (FieldElement x = g; x != 1; x = field_mul(f, x, g)) ++ord;
    REQUIRE(ord == f.size - 1);
    for (FieldElement a = 0; a < f.size; ++a) {
      REQUIRE(field_add(f, a, field_neg(f, a)) == 0);
      REQUIRE(field_mul(f, a, 1) == a);
      // Frobenius is additive and multiplicative.
      FieldElement ap = 1;
      for (std::uint32_t i = 0; i < p; ++i) ap = field_mul(f, ap, a);
      REQUIRE(field_frobenius(f, a) == ap);
      REQUIRE(field_pow(f, a, f.size) == a);
      if (a != 0) REQUIRE(field_mul(f, a, field_inv(f, a)) == 1);
      for (FieldElement b = 0; b < f.size; ++b) {
        REQUIRE(field_add(f, a, b) == field_add(f, b, a));
        REQUIRE(field_mul(f, a, b) == field_mul(f, b, a));
        REQUIRE(field_sub(f, field_add(f, a, b), b) == a);
        REQUIRE(field_frobenius(f, field_add(f, a, b)) ==
                field_add(f, field_frobenius(f, a), field_frobenius(f, b)));
        if (f.size > 16) continue;
        for (FieldElement c = 0; c < f.size; ++c) {
          REQUIRE(field_mul(f, a, field_add(f, b, c)) == field_add(f, field_mul(f, a, b), field_mul(f, a, c)));
          REQUIRE(field_mul(f, field_mul(f, a, b), c) == field_mul(f, a, field_mul(f, b, c)));
        }
      }
    }
  }
}

TEST_CASE("field errors", "[field]") {
  REQUIRE(code_of([] { field_make(4, 1); }) == ErrorCode::NotPrime);
  REQUIRE(code_of([] { field_inv(field_make(5, 1), 0); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("matrices over GF(9)", "[matrix]") {
  auto f = std::make_shared<const FieldSpec>(field_make(3, 2));
  std::mt19937 rng(11);
  std::uniform_int_distribution<FieldElement> d(0, f->size - 1);
  auto random_matrix = [&] { return mat_make(f, d(rng), d(rng), d(rng), d(rng)); };
  for (int i = 0; i < 500; ++i) {
    const Matrix2 a = random_matrix(), b = random_matrix();
    REQUIRE(mat_det(mat_mul(a, b)) == field_mul(*f, mat_det(a), mat_det(b)));
    REQUIRE(mat_mul(a, mat_identity(f)) == a);
    if (mat_det(a) != 0) {
      REQUIRE(mat_mul(a, mat_inv(a)) == mat_identity(f));
    } else {
      REQUIRE(code_of([&] { mat_inv(a); }) == ErrorCode::Singular);
    }
    REQUIRE(mat_conj_transpose(mat_conj_transpose(a)) == a);
  }
}

TEST_CASE("permutations", "[permutation]") {
  std::mt19937 rng(3);
  auto random_perm = [&] {
    Permutation p = perm_identity(7);
    std::shuffle(p.images.begin(), p.images.end(), rng);
    return p;
  };
  for (int i = 0; i < 300; ++i) {
    const auto a = random_perm(), b = random_perm(), c = random_perm();
    REQUIRE(perm_valid(a));
    REQUIRE(perm_compose(perm_compose(a, b), c) == perm_compose(a, perm_compose(b, c)));
    REQUIRE(perm_compose(a, perm_inverse(a)) == perm_identity(7));
    REQUIRE(perm_compose(perm_identity(7), a) == a);
  }
  const auto cyc = perm_from_cycles(4, {{0, 1, 2, 3}});
  REQUIRE(cyc.images == std::vector<std::uint16_t>{1, 2, 3, 0});
  REQUIRE_FALSE(perm_valid(Permutation{{0, 0, 1}}));
}

TEST_CASE("group specs round-trip", "[group_spec]") {
  for (const auto& s : default_catalog()) {
    const std::string text = to_string(s);
    INFO(text);
    REQUIRE(parse_group_spec(text) == s);
    REQUIRE(spec_from_json(spec_to_json(s)) == s);
    REQUIRE(parse_group_spec_any(spec_to_json(s).dump()) == s);
  }
  REQUIRE(parse_group_spec(" Direct( Cyclic(2) , Cyclic(3) ) ") == spec("Direct", spec("Cyclic", 2), spec("Cyclic", 3)));
}

TEST_CASE("group spec errors", "[group_spec]") {
  REQUIRE(code_of([] { parse_group_spec("Dihedral("); }) == ErrorCode::ParseError);
  REQUIRE(code_of([] { parse_group_spec("Cyclic(3) x"); }) == ErrorCode::ParseError);
  REQUIRE(code_of([] { catalog_build("NoSuchGroup(3)"); }) == ErrorCode::UnknownConstructor);
  REQUIRE(code_of([] { catalog_build("Cyclic(0)"); }) == ErrorCode::InvalidParameters);
  REQUIRE(code_of([] { catalog_build("Cyclic(2,3)"); }) == ErrorCode::InvalidParameters);
  REQUIRE(code_of([] { catalog_build("PSL2(6)"); }) == ErrorCode::InvalidParameters);
  REQUIRE(code_of([] { parse_group_spec_any(R"({"constructor":"Cyclic","params":{"m":3}})"); }) ==
          ErrorCode::InvalidParameters);
}

TEST_CASE("catalog groups satisfy the group axioms", "[group]") {
  for (const auto& s : default_catalog()) {
    const auto g = catalog_build(s);
    INFO(to_string(s));
    REQUIRE(verify_group_table(*g));
    REQUIRE(generated(*g, g->generators).order() == g->order);
  }
}

TEST_CASE("group orders follow the closed formulas", "[group]") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    REQUIRE(catalog_build(spec("Sym", static_cast<int>(n)))->order == oracle::factorial(n));
    if (n >= 2) REQUIRE(catalog_build(spec("Alt", static_cast<int>(n)))->order == oracle::factorial(n) / 2);
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const std::uint64_t sl = q * (q * q - 1);
    REQUIRE(catalog_build(spec("SL2", static_cast<int>(q)))->order == sl);
    REQUIRE(catalog_build(spec("PSL2", static_cast<int>(q)))->order == sl / oracle::gcd(2, q - 1));
  }
  REQUIRE(catalog_build("GU2_3")->order == 96);
  for (int n = 1; n <= 20; ++n) {
    REQUIRE(catalog_build(spec("Cyclic", n))->order == static_cast<std::size_t>(n));
    if (n >= 2) REQUIRE(catalog_build(spec("Dihedral", n))->order == static_cast<std::size_t>(2 * n));
    if (n >= 2) REQUIRE(catalog_build(spec("Dicyclic", n))->order == static_cast<std::size_t>(4 * n));
  }
  REQUIRE(catalog_build("Modular(3,2)")->order == 27);
  REQUIRE(catalog_build("HeisenbergLike(3,1)")->order == 27);
  REQUIRE(catalog_build("IrreducibleFrobenius(5,2,3)")->order == 75);
}

TEST_CASE("direct and semidirect products", "[group]") {
  const auto c2 = catalog_build("Cyclic(2)");
  const auto c3 = catalog_build("Cyclic(3)");
  const auto d = direct_product(*c2, *c3);
  REQUIRE(verify_group_table(*d));
  REQUIRE(d->order == 6);
  REQUIRE(is_abelian(*d));
  // Inversion on C3 gives S3.
  const auto inv = detail::power_map_table(*c3, -1);
  const auto sd = semidirect_product(*c3, *c2, {inv});
  REQUIRE(verify_group_table(*sd));
  REQUIRE(sd->order == 6);
  REQUIRE_FALSE(is_abelian(*sd));
  REQUIRE(order_fingerprint(*sd) == order_fingerprint(*catalog_build("Sym(3)")));
  REQUIRE(code_of([&] { extend_action(*c3, *c2, {std::vector<Elem>{0, 0, 0}}); }) == ErrorCode::NotAutomorphism);
}

TEST_CASE("order cap is enforced", "[group]") {
  const auto saved = order_cap();
  set_order_cap(20);
  REQUIRE(code_of([] { catalog_build("Sym(4)"); }) == ErrorCode::BudgetExceeded);
  set_order_cap(saved);
  REQUIRE(catalog_build("Sym(4)")->order == 24);
}

TEST_CASE("element orders", "[group]") {
  for (const auto& s : catalog_up_to(60)) {
    const auto g = catalog_build(s);
    for (Elem x = 0; x < g->order; ++x) REQUIRE(element_order(*g, x) == oracle::element_order(*g, x));
  }
}
