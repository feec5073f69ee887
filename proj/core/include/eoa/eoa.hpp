#pragma once

#include "eoa/averaging.hpp"
#include "eoa/cayley_euler.hpp"
#include "eoa/drift.hpp"
#include "eoa/error.hpp"
#include "eoa/evolution.hpp"
#include "eoa/finite_field.hpp"
#include "eoa/io.hpp"
#include "eoa/linear_code.hpp"
#include "eoa/orthogonal_array.hpp"
#include "eoa/parallel.hpp"
#include "eoa/schedule.hpp"
#include "eoa/symbol_matrix.hpp"
#include "eoa/tolerances.hpp"
#include "eoa/weyl.hpp"
