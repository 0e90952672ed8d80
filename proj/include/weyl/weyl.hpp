#pragma once

// Umbrella header: exact Weyl-algebra computation, noncommutative
// calculus, Hamiltonian structure, matrix identity testing, and IO.

#include "weyl/coefficient.hpp"
#include "weyl/fields.hpp"
#include "weyl/free_poly.hpp"
#include "weyl/generator.hpp"
#include "weyl/hamiltonian.hpp"
#include "weyl/json_io.hpp"
#include "weyl/matrix_eval.hpp"
#include "weyl/parse.hpp"
#include "weyl/print.hpp"
#include "weyl/random_gen.hpp"
#include "weyl/rational.hpp"
#include "weyl/verify.hpp"
#include "weyl/weyl_element.hpp"
