#pragma once

#include "ehspline/numeric.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/e4_piece.hpp"
#include "ehspline/hermite_data.hpp"
#include "ehspline/basis.hpp"
#include "ehspline/greens.hpp"
#include "ehspline/gram.hpp"
#include "ehspline/bezier.hpp"
#include "ehspline/subdivision.hpp"
#include "ehspline/curve.hpp"
