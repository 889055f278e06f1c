#pragma once

#include "regdist/partition.hpp"
#include "regdist/glaisher.hpp"
#include "regdist/bijection.hpp"
#include "regdist/qseries.hpp"
#include "regdist/orbit.hpp"
