#pragma once

#include "maxplus/errors.hpp"
#include "maxplus/genperm.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/mmipp.hpp"
#include "maxplus/pdiag.hpp"
#include "maxplus/roots.hpp"
#include "maxplus/scalar.hpp"
#include "maxplus/special.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/text_format.hpp"
