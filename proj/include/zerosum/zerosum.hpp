#pragma once

// Umbrella include.

#include "zerosum/certificates.hpp"
#include "zerosum/config.hpp"
#include "zerosum/covers.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/hom.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/sweeps.hpp"
#include "zerosum/weighted.hpp"
