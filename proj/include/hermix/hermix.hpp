#pragma once

#include "hermix/char_poly.hpp"
#include "hermix/cycles.hpp"
#include "hermix/enumeration.hpp"
#include "hermix/errors.hpp"
#include "hermix/gain.hpp"
#include "hermix/graph.hpp"
#include "hermix/spectra.hpp"
#include "hermix/structure.hpp"
#include "hermix/switching.hpp"
