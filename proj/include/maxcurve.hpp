// Umbrella header.

#pragma once

#include <maxcurve/arith.hpp>
#include <maxcurve/bounds.hpp>
#include <maxcurve/curve.hpp>
#include <maxcurve/error.hpp>
#include <maxcurve/gf.hpp>
#include <maxcurve/poly.hpp>
#include <maxcurve/rational.hpp>
#include <maxcurve/records.hpp>
#include <maxcurve/spectrum.hpp>
