#pragma once

// Umbrella header: exact-arithmetic laboratory for norms and seminorms on
// finitely supported rational sequences.

#include "seminorm_lab/rational.hpp"
#include "seminorm_lab/sparse_seq.hpp"
#include "seminorm_lab/index_rule.hpp"
#include "seminorm_lab/linear_map.hpp"
#include "seminorm_lab/lp.hpp"
#include "seminorm_lab/subspace.hpp"
#include "seminorm_lab/distance_lp.hpp"
#include "seminorm_lab/functional.hpp"
#include "seminorm_lab/quotient.hpp"
#include "seminorm_lab/sampling.hpp"
#include "seminorm_lab/axioms.hpp"
#include "seminorm_lab/report.hpp"
#include "seminorm_lab/grammar.hpp"
#include "seminorm_lab/witnesses.hpp"
#include "seminorm_lab/json_io.hpp"
#include "seminorm_lab/demos.hpp"
