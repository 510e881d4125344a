#ifndef FFLA_FFLA_HPP
#define FFLA_FFLA_HPP

#include "ffla/blackbox/berlekamp_massey.hpp"
#include "ffla/blackbox/preconditioned.hpp"
#include "ffla/blackbox/report.hpp"
#include "ffla/blackbox/solve.hpp"
#include "ffla/blackbox/wiedemann.hpp"
#include "ffla/core/errors.hpp"
#include "ffla/core/random.hpp"
#include "ffla/elim/derived.hpp"
#include "ffla/elim/echelon.hpp"
#include "ffla/elim/gf2.hpp"
#include "ffla/elim/ple.hpp"
#include "ffla/elim/triangular.hpp"
#include "ffla/field/ext_field.hpp"
#include "ffla/field/factor.hpp"
#include "ffla/field/polynomial.hpp"
#include "ffla/field/prime_field.hpp"
#include "ffla/matrix/blackbox.hpp"
#include "ffla/matrix/dense_matrix.hpp"
#include "ffla/matrix/io.hpp"
#include "ffla/matrix/permutation.hpp"
#include "ffla/matrix/random.hpp"
#include "ffla/matrix/sparse_matrix.hpp"
#include "ffla/matrix/view.hpp"
#include "ffla/mm/classic.hpp"
#include "ffla/mm/config.hpp"
#include "ffla/mm/fgemm.hpp"
#include "ffla/mm/gemm.hpp"
#include "ffla/mm/strassen.hpp"
#include "ffla/poly/charpoly.hpp"
#include "ffla/sparse/elimination.hpp"
#include "ffla/tiny/fgdp.hpp"
#include "ffla/tiny/gf2.hpp"
#include "ffla/tiny/gf3.hpp"
#include "ffla/tiny/qadic.hpp"
#include "ffla/tiny/redq.hpp"

#endif  // FFLA_FFLA_HPP
