// Copyright 2026 The qoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "qoa/subalgebra.hpp"

namespace qoa {

/// The commutative algebra spanned by {I, s1 x s1, s2 x s2, s3 x s3},
/// diagonal in the Bell basis. Its minimal projections are the Bell
/// projections p_plus, p_minus, q_plus, q_minus.
struct BellAlgebra {
  OperatorAlgebra algebra;
  Mat p_plus, p_minus, q_plus, q_minus;
};

BellAlgebra bell_algebra();

/// Element a(P+ + P-) + b(P+ - P-) + c(Q+ + Q-) + d(Q+ - Q-), i.e. the
/// matrix with diagonal pattern (a, c, c, a) and antidiagonal (b, d, d, b).
Mat bell_c_form(Complex a, Complex b, Complex c, Complex d);

/// The spectrum map (a+b, a-b, c+d, c-d); a componentwise algebra
/// isomorphism onto C^4.
std::array<Complex, 4> bell_kappa(const Mat& c);

/// Conditional expectation onto the Bell algebra: keeps only the
/// sigma_i (x) sigma_i coordinates.
Mat bell_expectation(const Mat& x);

/// Unitary in the Bell algebra with phases (t1..t4) on (P+, P-, Q+, Q-).
Mat bell_unitary(double t1, double t2, double t3, double t4);

struct BellDefects {
  double vs_bell = 0.0;       // m(C I x M_2)m* against the Bell algebra
  double vs_right = 0.0;      // against C I x M_2
  double vs_left = 0.0;       // against M_2 x C I
};

/// Quasi-orthogonality of m(C I (x) M_2)m* against the Bell algebra for a
/// unitary m inside it; vs_bell <= eps for every such m.
BellDefects bell_complementarity_defect(const Mat& m, double eps = kDefaultEps);

}  // namespace qoa
