#ifndef FGT_FGT_HPP_
#define FGT_FGT_HPP_

#include "fgt/catalog.hpp"
#include "fgt/claims/registry.hpp"
#include "fgt/claims/report.hpp"
#include "fgt/claims/search.hpp"
#include "fgt/lattice.hpp"
#include "fgt/predicates.hpp"
#include "fgt/structure.hpp"

#endif  // FGT_FGT_HPP_
