#pragma once

#include "pdg/assignment.hpp"
#include "pdg/curve.hpp"
#include "pdg/diagram.hpp"
#include "pdg/error.hpp"
#include "pdg/extended_real.hpp"
#include "pdg/gallery.hpp"
#include "pdg/geodesics.hpp"
#include "pdg/inequalities.hpp"
#include "pdg/io.hpp"
#include "pdg/matching.hpp"
#include "pdg/ot.hpp"
