#pragma once

#include "qtheta/codes.hpp"
#include "qtheta/coset_theta.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/io.hpp"
#include "qtheta/lattice_theta.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/quadring.hpp"
#include "qtheta/uniqueness.hpp"
