#pragma once

#include "errors.hpp"
#include "arith.hpp"
#include "poly.hpp"
#include "fp_poly.hpp"
#include "number_field.hpp"
#include "place.hpp"
#include "local.hpp"
#include "universe.hpp"
#include "describable.hpp"
#include "ultrafilter.hpp"
#include "tail.hpp"
#include "adele.hpp"
#include "spectrum.hpp"
#include "extensions.hpp"
#include "text.hpp"
