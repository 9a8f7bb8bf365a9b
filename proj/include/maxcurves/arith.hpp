#pragma once

#include "maxcurves/errors.hpp"
#include "maxcurves/expr.hpp"
#include "maxcurves/field.hpp"
#include "maxcurves/poly.hpp"
