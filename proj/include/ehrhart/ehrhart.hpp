#pragma once

#include "ehrhart/cells.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/exact.hpp"
#include "ehrhart/feasibility.hpp"
#include "ehrhart/hilbert.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/linalg.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"
#include "ehrhart/svg.hpp"
#include "ehrhart/theorems.hpp"
#include "ehrhart/translate.hpp"
