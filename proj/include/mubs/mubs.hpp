#pragma once

// Umbrella header: exact cyclotomic arithmetic, finite fields and Galois
// rings, constructions of mutually unbiased bases, generalized Pauli
// operators, verification, serialization, and the qudit simulator.

#include "mubs/basis.hpp"
#include "mubs/constructions.hpp"
#include "mubs/cyclotomic.hpp"
#include "mubs/exact_matrix.hpp"
#include "mubs/galois_field.hpp"
#include "mubs/galois_ring.hpp"
#include "mubs/pauli.hpp"
#include "mubs/serialize.hpp"
#include "mubs/simulator.hpp"
#include "mubs/verify.hpp"
