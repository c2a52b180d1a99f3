#pragma once

#include "semidom/congruence.hpp"
#include "semidom/constructors.hpp"
#include "semidom/core.hpp"
#include "semidom/dominion.hpp"
#include "semidom/enumerate.hpp"
#include "semidom/hcomm.hpp"
#include "semidom/io.hpp"
#include "semidom/relations.hpp"
#include "semidom/reports.hpp"
