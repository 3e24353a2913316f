#pragma once

#include "eagv/asymptotic.hpp"
#include "eagv/bigint.hpp"
#include "eagv/bound.hpp"
#include "eagv/error.hpp"
#include "eagv/galois_field.hpp"
#include "eagv/io.hpp"
#include "eagv/matrix.hpp"
#include "eagv/pareto.hpp"
#include "eagv/prime_power.hpp"
#include "eagv/symplectic.hpp"
#include "eagv/table1.hpp"
#include "eagv/witness.hpp"
