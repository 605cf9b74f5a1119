#pragma once

// Closed-form dim EHom(S^mu, S^lambda) at a primitive e-th root of unity in
// characteristic zero, for lambda with at most two rows and mu_1 >= lambda_2.

#include <string>
#include <vector>

#include "specht/tableaux.hpp"

namespace specht {

struct GoodShapeData {
  bool is_good = false;
  /// The remaining fields are filled only when is_good.
  int n_e_minus_1 = 0;
  Partition mu_star;
  int alpha = 0;
  int beta = 0;
};

GoodShapeData good_shape(const Partition& mu, int e);

enum class Branch {
  NotDominated,   // mu_1 > lambda_1
  OneRow,         // lambda = (n)
  RowStrip,       // mu_1 = lambda_1, reduce to the second row
  TwoPart,        // l(mu) = 2
  ThreePart,      // l(mu) = 3
  ThirdIsEm1,     // l(mu) >= 4, mu_3 = e-1
  GoodShapeN0,    // good shape, no parts equal to e-1
  GoodShapeN1,    // good shape, some part equal to e-1
  Last,           // l(mu) >= 4, otherwise
};

std::string to_string(Branch b);

struct Classification {
  int dim = 0;
  Branch branch = Branch::Last;
  /// For the good-shape branches: the lambdas that receive a homomorphism.
  std::vector<Partition> targets;
};

/// Throws std::invalid_argument if l(lambda) > 2, mu_1 < lambda_2, the sizes differ or e < 2.
Classification classify_detailed(const Partition& lambda, const Partition& mu, int e);
int classify(const Partition& lambda, const Partition& mu, int e);

/// Whether (lambda, mu) is inside the classifier's domain.
bool classifier_applies(const Partition& lambda, const Partition& mu);

}  // namespace specht
