#pragma once

#include "constructions.hpp"
#include "design.hpp"
#include "design_io.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "feasibility.hpp"
#include "hamming.hpp"
#include "lambda_profile.hpp"
#include "nonexistence.hpp"
#include "number_theory.hpp"
#include "parallel.hpp"
#include "point_set.hpp"
#include "relative.hpp"
#include "reldesign_io.hpp"
#include "subsets.hpp"
