/// Convenience umbrella header.
#ifndef EHRHART_ALL_HPP
#define EHRHART_ALL_HPP

#include "ehrhart/diagnostics.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/numeric.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytopes.hpp"
#include "ehrhart/roots.hpp"

#endif  // EHRHART_ALL_HPP
