#pragma once

#include "artin/error.hpp"
#include "artin/coxeter_graph.hpp"
#include "artin/word.hpp"
#include "artin/dihedral.hpp"
#include "artin/root_search.hpp"
#include "artin/parabolic.hpp"
#include "artin/normalizer.hpp"
#include "artin/complex_lab.hpp"
#include "artin/json.hpp"
