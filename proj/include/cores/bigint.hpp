#pragma once

#include <gmpxx.h>

namespace cores {

using BigInt = mpz_class;
using Rational = mpq_class;

} // namespace cores
