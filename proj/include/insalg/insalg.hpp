#pragma once

// Umbrella header: exact computation with insertion products on formal
// linear combinations of words, and brute-force identity checking on top.

#include "insalg/errors.hpp"
#include "insalg/rational.hpp"
#include "insalg/words.hpp"
#include "insalg/coefficient.hpp"
#include "insalg/polynomial.hpp"
#include "insalg/weights.hpp"
#include "insalg/insertion.hpp"
#include "insalg/identity.hpp"
#include "insalg/io.hpp"
