// Regenerates data/corpus: a few fixed examples plus seeded random integral
// functions on cubes large enough to contain every vertex of their complex.
//   make-corpus <output-dir>

#include "monge/io/files.hpp"
#include "monge/io/json_io.hpp"
#include "monge/subdivision/complex.hpp"

#include <cstdio>
#include <iostream>
#include <random>

using namespace monge;

namespace {

AffineFunctional piece(std::vector<long> slope, long intercept) {
  Vector m(static_cast<Eigen::Index>(slope.size()));
  for (std::size_t i = 0; i < slope.size(); ++i) m(static_cast<Eigen::Index>(i)) = Rational(slope[i]);
  return {m, Rational(intercept)};
}

PAConvexFunction roomy(const std::vector<AffineFunctional>& pieces, Eigen::Index n) {
  const PAConvexFunction huge(pieces, cube(n, Rational(-100000), Rational(100000)));
  Rational r(1);
  for (const auto& v : interior_vertices(linearity_complex(huge)))
    for (Eigen::Index i = 0; i < n; ++i) r = std::max(r, Rational(abs(v(i)) + 1));
  return PAConvexFunction(pieces, cube(n, -r, r));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-corpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  auto save = [&](const std::string& name, const PAConvexFunction& h) {
    io::write_file_atomic(dir / (name + ".json"), io::dump(io::to_json(h)));
  };

  save("fixed_1d_v", PAConvexFunction({piece({-1}, 0), piece({1}, 0)}, cube(1, Rational(-1), Rational(1))));
  save("fixed_2d_tropical_square",
       PAConvexFunction({piece({0, 0}, 0), piece({1, 0}, 0), piece({0, 1}, 0), piece({1, 1}, 0)},
                        cube(2, Rational(-1), Rational(1))));
  save("fixed_2d_max_0_x_y",
       PAConvexFunction({piece({0, 0}, 0), piece({1, 0}, 0), piece({0, 1}, 0)}, cube(2, Rational(-1), Rational(1))));
  save("fixed_2d_scaled_square",
       PAConvexFunction({piece({0, 0}, 0), piece({3, 0}, 0), piece({0, 3}, 0), piece({3, 3}, 0)},
                        cube(2, Rational(-1), Rational(1))));
  save("fixed_3d_max_0_x_y_z", PAConvexFunction({piece({0, 0, 0}, 0), piece({1, 0, 0}, 0), piece({0, 1, 0}, 0),
                                                  piece({0, 0, 1}, 0)},
                                                 cube(3, Rational(-1), Rational(1))));

  std::mt19937 rng(20240607);
  std::uniform_int_distribution<long> slope(-3, 3), intercept(-4, 4);
  for (Eigen::Index n = 1; n <= 3; ++n) {
    for (int k = 0; k < 5; ++k) {
      std::vector<AffineFunctional> pieces;
      for (int i = 0; i < 3 + 2 * static_cast<int>(n); ++i) {
        Vector m(n);
        for (Eigen::Index j = 0; j < n; ++j) m(j) = Rational(slope(rng));
        pieces.push_back({m, Rational(intercept(rng))});
      }
      char name[32];
      std::snprintf(name, sizeof name, "random_%ldd_%02d", static_cast<long>(n), k);
      save(name, roomy(pieces, n));
    }
  }
  return 0;
}
