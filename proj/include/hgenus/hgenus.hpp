#pragma once

#include "characteristic_series.hpp"
#include "error.hpp"
#include "genera.hpp"
#include "graded_polynomial.hpp"
#include "manifolds.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "report_io.hpp"
#include "symmetric.hpp"
#include "table_io.hpp"
#include "vanishing.hpp"
