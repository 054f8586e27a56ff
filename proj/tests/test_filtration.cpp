#include <doctest.h>

#include "lamk/filtration.hpp"
#include "oracle.hpp"

using namespace lamk;

namespace {
// Closed form: Fil^q of P^{a_1} x ... x P^{a_k} is spanned by the u-monomials of degree >= q.
std::size_t closed_form_rank(const std::vector<int>& bounds, int q) {
  const oracle::Trunc t(bounds);
  std::size_t count = 0;
  for (std::size_t i = 0; i < t.c.size(); ++i) {
    int deg = 0;
    for (int e : t.exps(i)) deg += e;
    count += deg >= q;
  }
  return count;
}

void check_closed_form(const SchemeModel& s, const std::vector<int>& bounds) {
  const auto g = gamma_filtration(s);
  const auto t = top_filtration(s);
  for (int q = 0; q <= s.dimension + 2; ++q) {
    for (const auto* f : {&g, &t}) {
      const auto& l = f->level(q);
      CHECK(l.rank() == closed_form_rank(bounds, q));
      for (const auto& row : l.basis()) CHECK(oracle::value(bounds, from_vector(s.ring(), row).polynomial()).in_level(q));
    }
    CHECK(g.level(q) == t.level(q));
  }
}
}  // namespace

TEST_CASE("filtrations of projective spaces and products have the closed form") {
  for (int n = 0; n <= 4; ++n) check_closed_form(projective_space(n), {n});
  check_closed_form(product_model(projective_space(1), projective_space(1)), {1, 1});
  check_closed_form(product_model(projective_space(2), projective_space(1)), {2, 1});
}

TEST_CASE("graded pieces") {
  const auto s = product_model(projective_space(1), projective_space(1));
  const auto t = top_filtration(s);
  CHECK(graded_piece(t, 0).rational_rank == 1);
  CHECK(graded_piece(t, 1).rational_rank == 2);
  CHECK(graded_piece(t, 2).rational_rank == 1);
  CHECK(graded_piece(t, 3).rational_rank == 0);
  CHECK(graded_piece(t, 1).group.to_string() == "Z^2");
}

TEST_CASE("level indexing") {
  const auto p2 = projective_space(2);
  const auto t = top_filtration(p2);
  CHECK(t.level(-1).rank() == 3);
  CHECK(t.level(50).is_zero());
  CHECK(t.level_name(2) == "top:2");
  CHECK(filtration_member(p2.element("(h-1)^2"), t.level(2)));
  CHECK(!filtration_member(p2.element("h-1"), t.level(2)));
}

TEST_CASE("module closure and products") {
  const auto p2 = projective_space(2);
  const auto& r = p2.ring();
  const auto gen = IntegerLattice::from_generators(3, {to_vector(p2.element("h - 1"))});
  const auto ideal = module_closure(r, gen);
  CHECK(ideal.rank() == 2);
  CHECK(product_lattice(r, ideal, ideal).rank() == 1);
  CHECK(augmentation_ideal(p2.model) == ideal);
}
