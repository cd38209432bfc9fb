/*!
  \file mvnc.hpp
  \brief Umbrella header
*/

#pragma once

#include "canalization.hpp"
#include "domain.hpp"
#include "dynamics.hpp"
#include "function.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "sensitivity.hpp"
#include "spectral.hpp"
