#pragma once

// Umbrella header for the lexseg core library.

#include "lexseg/errors.hpp"
#include "lexseg/lexsegment.hpp"
#include "lexseg/monomial.hpp"
#include "lexseg/quotients.hpp"
#include "lexseg/tableau.hpp"
#include "lexseg/toric.hpp"
