#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace hermring::fixtures {

struct PlusRecipeTerm {
  long long coeff;
  int theta_exp;  // even; theta^2 carries weight 1
  int f2_exp;
};

// Published q-expansion of one plus-space form: dense table of the
// coefficients of q^0 .. q^bound together with its theta/f2 recipe.
struct PlusFormFixture {
  const char* name;
  int weight;
  long bound;  // Sturm bound b_k; table covers exactly q^0..q^bound
  const long long* coeffs;
  std::size_t coeff_count;
  const PlusRecipeTerm* recipe;
  std::size_t recipe_count;
};

std::span<const PlusFormFixture> plus_form_fixtures();
const PlusFormFixture* find_plus_form_fixture(std::string_view name);

}  // namespace hermring::fixtures
