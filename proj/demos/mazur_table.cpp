// Prints the order of the distinguished cuspidal class at prime levels,
// next to numerator((N-1)/12), plus a few composite showcase rows.

#include <cuspidal/cuspidal.hpp>

#include <iostream>

using namespace cuspidal;

int main(int argc, char** argv) {
  std::int64_t bound = 100;
  if (argc > 1) bound = std::stoll(argv[1]);

  std::cout << "N\torder\tnumerator((N-1)/12)\n";
  for (std::int64_t n = 5; n <= bound; ++n) {
    if (!is_prime(n)) continue;
    const FactoredInteger N = factorize(n);
    const Integer ord = order_closed_form(N, SignVector{-1});
    const Integer mazur = numerator_of(rational(n - 1, 12));
    std::cout << n << "\t" << ord.get_str() << "\t" << mazur.get_str() << "\n";
  }

  std::cout << "\ncomposite levels (all admissible sign vectors)\n";
  std::cout << "N\teps\tclosed\tmatrix\n";
  for (std::int64_t n : {9, 12, 45, 50, 121}) {
    const FactoredInteger N = factorize(n);
    for (const auto& eps : all_sign_vectors(N.squarefree_prime_count())) {
      if (!admissible(N, eps)) continue;
      std::string tag;
      for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i) tag += ',';
        tag += eps[i] == 1 ? "+1" : "-1";
      }
      if (tag.empty()) tag = "()";
      std::cout << n << "\t" << tag << "\t"
                << order_closed_form(N, eps).get_str() << "\t"
                << order_matrix_path(N, eps).get_str() << "\n";
    }
  }
  return 0;
}
