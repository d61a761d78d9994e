#pragma once

#include "hring/arithmetic.hpp"
#include "hring/dynamics.hpp"
#include "hring/errors.hpp"
#include "hring/maps.hpp"
#include "hring/parameters.hpp"
#include "hring/polynomial.hpp"
#include "hring/quadlike.hpp"
#include "hring/render.hpp"
#include "hring/rotation.hpp"
#include "hring/search.hpp"
#include "hring/sphere.hpp"
