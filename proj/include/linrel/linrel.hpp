#pragma once

#include "linrel/error.hpp"
#include "linrel/rational.hpp"
#include "linrel/scalar.hpp"
#include "linrel/linalg.hpp"
#include "linrel/relation.hpp"
#include "linrel/dual_pair.hpp"
#include "linrel/extension.hpp"
#include "linrel/rng.hpp"
#include "linrel/generate.hpp"
#include "linrel/campaign.hpp"
#include "linrel/io.hpp"
