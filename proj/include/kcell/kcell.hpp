/**
 * Umbrella header.
 */
#ifndef KCELL_KCELL_HPP
#define KCELL_KCELL_HPP

#include "chain.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "int_matrix.hpp"
#include "lie_type.hpp"
#include "root_system.hpp"
#include "snf.hpp"
#include "ugroup.hpp"
#include "weyl.hpp"

#endif // KCELL_KCELL_HPP
