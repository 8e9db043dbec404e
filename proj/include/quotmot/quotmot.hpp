#ifndef QUOTMOT_QUOTMOT_HPP
#define QUOTMOT_QUOTMOT_HPP

// Umbrella header: exact motive arithmetic, closed-form calculators,
// stabilisation verifiers, and the finite-field counting oracle.

#include "quotmot/cohomology.hpp"
#include "quotmot/errors.hpp"
#include "quotmot/hilbert_samuel.hpp"
#include "quotmot/lpoly.hpp"
#include "quotmot/lseries.hpp"
#include "quotmot/motives.hpp"
#include "quotmot/mseries.hpp"
#include "quotmot/nested.hpp"
#include "quotmot/oracle.hpp"
#include "quotmot/quot.hpp"
#include "quotmot/report.hpp"

#endif
