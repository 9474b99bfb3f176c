#pragma once

// Umbrella header.
#include "radgen/abc_scanner.hpp"
#include "radgen/compensated_sum.hpp"
#include "radgen/config.hpp"
#include "radgen/dirichlet_series.hpp"
#include "radgen/errors.hpp"
#include "radgen/euler_product.hpp"
#include "radgen/identity_checks.hpp"
#include "radgen/mult_fn.hpp"
#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/primes.hpp"
#include "radgen/radical.hpp"
#include "radgen/st_kernel.hpp"
#include "radgen/tail_bounds.hpp"
#include "radgen/truncated_sum.hpp"
