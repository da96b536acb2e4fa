#include <doctest.h>

#include "properties.hpp"

namespace {

void require_clean(const props::Tally& t) {
  INFO(t.name);
  for (const std::string& f : t.failures) INFO("failed at " << f);
  CHECK(t.checked > 0);
  CHECK(t.failures.empty());
}

const props::Window kWindow{8, 6, 5, 45, 200};

}  // namespace

TEST_CASE("Galois closure") { require_clean(props::galois_closure(kWindow)); }

TEST_CASE("de2 monotonicity") { require_clean(props::de2_monotonicity(kWindow)); }

TEST_CASE("la1 triple product") { require_clean(props::la1_triple_product(kWindow)); }

TEST_CASE("determinant and parity") { require_clean(props::determinant_parity(kWindow)); }

TEST_CASE("enumeration count") { require_clean(props::enumeration_count(kWindow)); }

TEST_CASE("the de2 range cannot be widened to i = n/2") {
  // Lambda^2 of (e, -e, f, -f) holds e+f, which need not lie in Lambda^4 = {1}.
  const std::vector<std::uint32_t> d{1, 6, 2, 5};
  CHECK_FALSE(props::de2_holds(d, 7, 2));
  CHECK(props::de2_holds({1, 6, 2, 5, 3, 4}, 7, 2));
}
