#pragma once
// Convenience umbrella: the whole library.

#include "cuspidal/arith.hpp"
#include "cuspidal/cusps.hpp"
#include "cuspidal/cuspidal_divisor.hpp"
#include "cuspidal/integer_matrix.hpp"
#include "cuspidal/smith.hpp"
#include "cuspidal/order.hpp"
#include "cuspidal/qseries.hpp"
#include "cuspidal/residues.hpp"
#include "cuspidal/lattice_maps.hpp"
#include "cuspidal/index.hpp"
