#ifndef COXREG_COXREG_HPP
#define COXREG_COXREG_HPP

#include "coxreg/arith.hpp"
#include "coxreg/bounds.hpp"
#include "coxreg/coefficients.hpp"
#include "coxreg/complex.hpp"
#include "coxreg/cplx_io.hpp"
#include "coxreg/error.hpp"
#include "coxreg/generators.hpp"
#include "coxreg/homology.hpp"
#include "coxreg/linalg.hpp"
#include "coxreg/parallel.hpp"
#include "coxreg/quotient.hpp"
#include "coxreg/racg.hpp"
#include "coxreg/sr_invariants.hpp"

#endif  // COXREG_COXREG_HPP
