#pragma once

// Umbrella header for the exact slim-normal-basis / ADFT library.

#include <adft/adft_matrix.hpp>
#include <adft/cyclo.hpp>
#include <adft/dirichlet.hpp>
#include <adft/fadft.hpp>
#include <adft/io.hpp>
#include <adft/leopoldt.hpp>
#include <adft/linalg.hpp>
#include <adft/numt.hpp>
#include <adft/rational.hpp>
#include <adft/slim.hpp>
#include <adft/verify.hpp>
