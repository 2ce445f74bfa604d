#pragma once

#include "cmsep/eigensolver.hpp"
#include "cmsep/errors.hpp"
#include "cmsep/format.hpp"
#include "cmsep/minimize.hpp"
#include "cmsep/molecules.hpp"
#include "cmsep/oscillator.hpp"
#include "cmsep/quadrature.hpp"
#include "cmsep/regression.hpp"
#include "cmsep/svg.hpp"
#include "cmsep/variational.hpp"
