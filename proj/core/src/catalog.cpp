#include "liegeo/catalog.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"

namespace liegeo {

LieAlgebra heis3() { return standard_filiform(3).renamed("heis3"); }

LieAlgebra heis6_2center() {
  // X_1..X_4 = 1..4, Y_1 = 5, Y_2 = 6
  return LieAlgebra::Builder(6, "heis6_2center")
      .add(1, 2, 5, 1)
      .add(3, 4, 5, -1)
      .add(1, 3, 6, 1)
      .add(2, 4, 6, 1)
      .build();
}

LieAlgebra so3() { return LieAlgebra::Builder(3, "so3").add(1, 2, 3, 1).add(2, 3, 1, 1).add(3, 1, 2, 1).build(); }

LieAlgebra sl2() { return LieAlgebra::Builder(3, "sl2").add(1, 2, 2, 2).add(1, 3, 3, -2).add(2, 3, 1, 1).build(); }

LieAlgebra solv_rot() { return LieAlgebra::Builder(3, "solv_rot").add(1, 2, 3, 1).add(1, 3, 2, -1).build(); }

LieAlgebra solv_exp() { return LieAlgebra::Builder(3, "solv_exp").add(1, 2, 2, 1).add(1, 3, 3, -1).build(); }

LieAlgebra dim4_twisted() {
  return LieAlgebra::Builder(4, "dim4_twisted").add(1, 2, 3, 1).add(1, 3, 4, 1).add(2, 3, 4, 1).build();
}

LieAlgebra dim4_beta() {
  return LieAlgebra::Builder(4, "dim4_beta").add(1, 2, 3, 1).add(1, 2, 4, 1).add(1, 3, 4, 1).build();
}

std::vector<std::string> catalog_names() {
  return {"Ln",       "LC",  "heis3", "dim6",     "irreg6",   "heis6_2center", "so3",          "sl2",
          "solv_rot", "solv_exp", "cd2f", "abelian", "dim4_twisted", "dim4_beta"};
}

namespace {

std::size_t parse_dim(const std::vector<std::string>& params, const std::string& name, std::size_t min) {
  if (params.size() != 1) throw InvalidArgument(name + ": expected one integer parameter n");
  const Scalar s = parse_scalar(params[0]);
  if (s.get_den() != 1 || s < static_cast<long>(min) || s > 64)
    throw InvalidArgument(name + ": n must be an integer in [" + std::to_string(min) + ", 64]");
  return static_cast<std::size_t>(s.get_num().get_ui());
}

void no_params(const std::vector<std::string>& params, const std::string& name) {
  if (!params.empty()) throw InvalidArgument(name + ": takes no parameters");
}

}  // namespace

LieAlgebra catalog_algebra(const std::string& name, const std::vector<std::string>& params) {
  if (name == "Ln") return standard_filiform(parse_dim(params, name, 3));
  if (name == "cd2f") return standard_filiform(parse_dim(params, name, 3));
  if (name == "abelian") return LieAlgebra::abelian(parse_dim(params, name, 1), "abelian");
  if (name == "LC") {
    if (params.empty()) throw InvalidArgument("LC: expected coefficients c_2 ... c_{n-1}");
    std::vector<Scalar> c;
    for (const auto& p : params)
      for (const auto& v : parse_vector(p)) c.push_back(v);
    return filiform_LC(c);
  }
  no_params(params, name);
  if (name == "heis3") return heis3();
  if (name == "dim6") return dim6_example();
  if (name == "irreg6") return irreg6_example().algebra;
  if (name == "heis6_2center") return heis6_2center();
  if (name == "so3") return so3();
  if (name == "sl2") return sl2();
  if (name == "solv_rot") return solv_rot();
  if (name == "solv_exp") return solv_exp();
  if (name == "dim4_twisted") return dim4_twisted();
  if (name == "dim4_beta") return dim4_beta();
  throw InvalidArgument("unknown catalog entry: " + name);
}

std::vector<LieAlgebra> filiform_fixtures() {
  std::vector<LieAlgebra> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(standard_filiform(n));
  out.push_back(filiform_LC({2, 3, 4}));
  out.push_back(dim6_example());
  out.push_back(irreg6_example().algebra);
  out.push_back(dim4_twisted());
  out.push_back(dim4_beta());
  return out;
}

std::vector<LieAlgebra> nilpotent_fixtures() {
  auto out = filiform_fixtures();
  out.push_back(heis6_2center());
  out.push_back(direct_sum(standard_filiform(4), LieAlgebra::abelian(1)).renamed("L4+R"));
  out.push_back(LieAlgebra::abelian(3, "abelian3"));
  return out;
}

std::vector<LieAlgebra> all_fixtures() {
  auto out = nilpotent_fixtures();
  for (auto g : {so3(), sl2(), solv_rot(), solv_exp()}) out.push_back(g);
  return out;
}

}  // namespace liegeo
